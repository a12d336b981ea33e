#include "eqgamma/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eqgamma/error.hpp"

namespace eqgamma {

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw Error(ErrorCode::InvalidArgument, "class function without a group");
  if (values_.size() != group_->class_count())
    throw Error(ErrorCode::SizeMismatch, "class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const std::size_t k = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(k));
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& value) {
  const std::size_t k = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(k, value));
}

ClassFunction ClassFunction::from_function(
    GroupPtr group, const std::function<Cyclotomic(const Permutation&)>& f) {
  std::vector<Cyclotomic> values;
  values.reserve(group->class_count());
  for (std::size_t c = 0; c < group->class_count(); ++c)
    values.push_back(f(group->class_representative(c)));
  return ClassFunction(std::move(group), std::move(values));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

bool ClassFunction::is_integer_valued() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Cyclotomic& v) { return v.is_integer(); });
}

void ClassFunction::check_same_group(const ClassFunction& other) const {
  if (group_ != other.group_ && !(group_ && other.group_ &&
                                  group_->degree() == other.group_->degree() &&
                                  std::equal(group_->elements().begin(), group_->elements().end(),
                                             other.group_->elements().begin(),
                                             other.group_->elements().end())))
    throw Error(ErrorCode::SizeMismatch, "class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] *= other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.values_.size() != b.values_.size()) return false;
  return a.values_ == b.values_;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  const auto& g = *f.group();
  if (h.values().size() != f.values().size())
    throw Error(ErrorCode::SizeMismatch, "class functions live on different groups");
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (f.at_class(c).is_zero() || h.at_class(c).is_zero()) continue;
    sum += f.at_class(c) * h.at_class(c).conj() * static_cast<std::int64_t>(g.class_size(c));
  }
  return sum / Rational(static_cast<std::int64_t>(g.order()));
}

// ---------------------------------------------------------------------------
// CharacterTable

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles,
                               std::vector<std::string> names)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)), names_(std::move(names)) {
  if (irreducibles_.size() != group_->class_count())
    throw Error(ErrorCode::SizeMismatch, "character table must be square");
  for (const auto& chi : irreducibles_) degrees_.push_back(chi.at_class(0).integer_value());
  if (names_.empty())
    for (std::size_t i = 0; i < irreducibles_.size(); ++i)
      names_.push_back(i == 0 ? "1" : "X." + std::to_string(i));
  if (names_.size() != irreducibles_.size())
    throw Error(ErrorCode::SizeMismatch, "one name per irreducible is required");
}

std::optional<std::size_t> CharacterTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool CharacterTable::verify_orthogonality() const {
  const auto& g = *group_;
  const std::size_t k = size();
  std::int64_t square_sum = 0;
  for (auto d : degrees_) square_sum += d * d;
  if (square_sum != static_cast<std::int64_t>(g.order())) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (inner_product(irreducibles_[i], irreducibles_[j]) != Cyclotomic(i == j ? 1 : 0))
        return false;
  // Column relation: sum_chi chi(a) conj(chi(b)) = |C_G(a)| [a = b].
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (const auto& chi : irreducibles_) s += chi.at_class(a) * chi.at_class(b).conj();
      const std::int64_t expected =
          a == b ? static_cast<std::int64_t>(g.order() / g.class_size(a)) : 0;
      if (s != Cyclotomic(expected)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// VirtualCharacter

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<std::int64_t> multiplicities)
    : table_(std::move(table)), mult_(std::move(multiplicities)) {
  if (!table_) throw Error(ErrorCode::InvalidArgument, "virtual character without a table");
  if (mult_.size() != table_->size())
    throw Error(ErrorCode::SizeMismatch, "one multiplicity per irreducible is required");
}

VirtualCharacter VirtualCharacter::zero(TablePtr table) {
  const std::size_t k = table->size();
  return VirtualCharacter(std::move(table), std::vector<std::int64_t>(k, 0));
}

VirtualCharacter VirtualCharacter::irreducible(TablePtr table, std::size_t i) {
  VirtualCharacter v = zero(std::move(table));
  v.mult_.at(i) = 1;
  return v;
}

ClassFunction VirtualCharacter::class_function() const {
  ClassFunction f = ClassFunction::zero(table_->group());
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) f += table_->irreducible(i) * Cyclotomic(mult_[i]);
  return f;
}

std::int64_t VirtualCharacter::degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) d += mult_[i] * table_->degree(i);
  return d;
}

bool VirtualCharacter::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](std::int64_t m) { return m == 0; });
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& other) {
  if (other.mult_.size() != mult_.size())
    throw Error(ErrorCode::SizeMismatch, "virtual characters over different tables");
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] += other.mult_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& other) {
  if (other.mult_.size() != mult_.size())
    throw Error(ErrorCode::SizeMismatch, "virtual characters over different tables");
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] -= other.mult_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(std::int64_t scalar) {
  for (auto& m : mult_) m *= scalar;
  return *this;
}

std::string VirtualCharacter::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    const std::int64_t m = mult_[i];
    if (m == 0) continue;
    const std::int64_t mag = m < 0 ? -m : m;
    const std::string& name = table_->name(i);
    std::string term;
    if (name == "1")
      term = std::to_string(mag);
    else
      term = (mag == 1 ? "" : std::to_string(mag) + "*") + name;
    if (out.empty())
      out = m < 0 ? "-" + term : term;
    else
      out += (m < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Dixon-Burnside

namespace {

using i64 = std::int64_t;

i64 mod_pow(i64 base, i64 exp, i64 p) {
  i64 result = 1;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 n = p - 1;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  for (i64 r = 2; r < p; ++r) {
    bool ok = true;
    for (i64 q : factors)
      if (mod_pow(r, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  throw Error(ErrorCode::InternalError, "no primitive root found");
}

using Matrix = std::vector<std::vector<i64>>;  // row-major, entries in [0, p)

// Basis (as columns, returned as a list of vectors) of the null space of M.
std::vector<std::vector<i64>> null_space(Matrix m, i64 p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const i64 inv = mod_inv(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const i64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<i64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<i64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial of a square matrix over F_p (Faddeev-LeVerrier),
// coefficients constant term first, monic.
std::vector<i64> char_poly(const Matrix& x, i64 p) {
  const std::size_t n = x.size();
  std::vector<i64> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<i64>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = X M_{k-1} + c_{n-k+1} I
    Matrix next(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (x[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = (next[i][j] + x[i][l] * m[l][j]) % p;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] = (next[i][i] + c[n - k + 1]) % p;
    m = std::move(next);
    i64 tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr = (tr + x[i][l] * m[l][i]) % p;
    c[n - k] = (p - tr) % p * mod_inv(static_cast<i64>(k), p) % p;
  }
  return c;
}

// Splits the subspace spanned by `basis` (vectors of length k) into common
// eigenspaces of the operator v -> A v. A is assumed diagonalisable on it.
std::vector<std::vector<std::vector<i64>>> split(const Matrix& a,
                                                 const std::vector<std::vector<i64>>& basis,
                                                 i64 p) {
  const std::size_t k = a.size();
  const std::size_t dim = basis.size();
  // Images A b_j.
  std::vector<std::vector<i64>> images(dim, std::vector<i64>(k, 0));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < k; ++r) {
      i64 s = 0;
      for (std::size_t c = 0; c < k; ++c) s = (s + a[r][c] * basis[j][c]) % p;
      images[j][r] = s;
    }
  // Express images in the basis: solve B X = A B by reducing [B | AB].
  Matrix aug(k, std::vector<i64>(2 * dim, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < dim; ++j) {
      aug[r][j] = basis[j][r];
      aug[r][dim + j] = images[j][r];
    }
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t piv = row;
    while (piv < k && aug[piv][c] == 0) ++piv;
    if (piv == k) throw Error(ErrorCode::InternalError, "degenerate subspace basis");
    std::swap(aug[piv], aug[row]);
    const i64 inv = mod_inv(aug[row][c], p);
    for (auto& v : aug[row]) v = v * inv % p;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      const i64 f = aug[i][c];
      for (std::size_t j = 0; j < 2 * dim; ++j) aug[i][j] = ((aug[i][j] - f * aug[row][j]) % p + p) % p;
    }
    ++row;
  }
  Matrix x(dim, std::vector<i64>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) x[i][j] = aug[i][dim + j];

  const auto cp = char_poly(x, p);
  std::vector<std::vector<std::vector<i64>>> parts;
  std::size_t found = 0;
  for (i64 lambda = 0; lambda < p && found < dim; ++lambda) {
    i64 v = 0;
    for (std::size_t i = cp.size(); i-- > 0;) v = (v * lambda + cp[i]) % p;
    if (v != 0) continue;
    Matrix shifted = x;
    for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = (shifted[i][i] - lambda + p) % p;
    auto ns = null_space(shifted, p);
    std::vector<std::vector<i64>> space;
    for (const auto& coeffs : ns) {
      std::vector<i64> w(k, 0);
      for (std::size_t j = 0; j < dim; ++j) {
        if (coeffs[j] == 0) continue;
        for (std::size_t r = 0; r < k; ++r) w[r] = (w[r] + coeffs[j] * basis[j][r]) % p;
      }
      space.push_back(std::move(w));
    }
    found += space.size();
    parts.push_back(std::move(space));
  }
  if (found != dim)
    throw Error(ErrorCode::InternalError, "class-sum operator is not diagonalisable mod p");
  return parts;
}

}  // namespace

TablePtr character_table(const GroupPtr& group) {
  const PermGroup& g = *group;
  const std::size_t k = g.class_count();
  const i64 order = static_cast<i64>(g.order());
  const i64 exponent = g.exponent();

  i64 p = exponent + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  while (!(is_prime(p) && static_cast<double>(p) > bound)) p += exponent;
  const i64 z = mod_pow(primitive_root(p), (p - 1) / exponent, p);

  // Structure constants: a[j][i][l] = #{x in C_j : x^{-1} z_l in C_i}, so that
  // omega_j omega_i = sum_l a[j][i][l] omega_l for every central character.
  std::vector<Matrix> a(k, Matrix(k, std::vector<i64>(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const Permutation& zl = g.class_representative(l);
    for (std::size_t xi = 0; xi < g.order(); ++xi) {
      const Permutation& x = g.element(xi);
      const std::size_t j = g.class_of_index(xi);
      const std::size_t i = g.class_of(x.inverse() * zl);
      ++a[j][i][l];
    }
  }
  for (auto& m : a)
    for (auto& row : m)
      for (auto& v : row) v %= p;

  // Common eigenvectors of all A_j (acting as v -> A_j v with (A_j)[i][l]).
  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> full;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<i64> e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (auto& part : split(a[j], space, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw Error(ErrorCode::InternalError, "class sums do not separate the characters");

  const auto inverse_class = [&](std::size_t c) { return g.inverse_class(c); };
  std::vector<ClassFunction> irreducibles;
  for (const auto& space : spaces) {
    // A common eigenvector is the central character (omega_l) up to scale;
    // omega at the identity class is 1.
    std::vector<i64> omega = space.front();
    if (omega[0] == 0) throw Error(ErrorCode::InternalError, "eigenvector vanishes at the identity");
    const i64 s = mod_inv(omega[0], p);
    for (auto& x : omega) x = x * s % p;
    i64 denom = 0;
    for (std::size_t i = 0; i < k; ++i)
      denom = (denom + omega[i] * omega[inverse_class(i)] % p *
                           mod_inv(static_cast<i64>(g.class_size(i)) % p, p)) % p;
    const i64 d2 = order % p * mod_inv(denom, p) % p;
    i64 degree = 0;
    for (i64 d = 1; d * d <= order; ++d)
      if (d * d % p == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw Error(ErrorCode::InternalError, "no character degree matches mod p");

    std::vector<i64> chi_mod(k);
    for (std::size_t i = 0; i < k; ++i)
      chi_mod[i] = degree * omega[i] % p * mod_inv(static_cast<i64>(g.class_size(i)) % p, p) % p;

    std::vector<Cyclotomic> values;
    values.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      const i64 o = g.class_representative(i).order();
      const i64 zo = mod_pow(z, exponent / o, p);
      const i64 zo_inv = mod_inv(zo, p);
      const i64 o_inv = mod_inv(o % p, p);
      std::vector<i64> powers_class(static_cast<std::size_t>(o));
      for (i64 l = 0; l < o; ++l) powers_class[l] = static_cast<i64>(g.power_class(i, l));
      std::vector<Rational> coeffs(static_cast<std::size_t>(o), Rational(0));
      i64 total = 0;
      for (i64 e = 0; e < o; ++e) {
        i64 m = 0;
        const i64 step = mod_pow(zo_inv, e, p);
        i64 root = 1;
        for (i64 l = 0; l < o; ++l) {
          m = (m + chi_mod[powers_class[l]] * root) % p;
          root = root * step % p;
        }
        m = m * o_inv % p;
        if (m > degree) throw Error(ErrorCode::InternalError, "eigenvalue multiplicity out of range");
        coeffs[e] = m;
        total += m;
      }
      if (total != degree) throw Error(ErrorCode::InternalError, "eigenvalue multiplicities do not sum to the degree");
      values.push_back(Cyclotomic::from_coefficients(static_cast<int>(o), std::move(coeffs)));
    }
    irreducibles.emplace_back(group, std::move(values));
  }

  auto is_trivial = [](const ClassFunction& f) {
    return std::all_of(f.values().begin(), f.values().end(),
                       [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::sort(irreducibles.begin(), irreducibles.end(),
            [&](const ClassFunction& x, const ClassFunction& y) {
              const bool tx = is_trivial(x), ty = is_trivial(y);
              if (tx != ty) return tx;
              const auto dx = x.at_class(0).integer_value(), dy = y.at_class(0).integer_value();
              if (dx != dy) return dx < dy;
              return std::lexicographical_compare(
                  x.values().begin(), x.values().end(), y.values().begin(), y.values().end(),
                  [](const Cyclotomic& u, const Cyclotomic& v) { return u < v; });
            });
  auto table = std::make_shared<const CharacterTable>(group, std::move(irreducibles));
  if (!table->verify_orthogonality())
    throw Error(ErrorCode::InternalError, "computed character table fails orthogonality");
  return table;
}

VirtualCharacter decompose(const TablePtr& table, const ClassFunction& f) {
  std::vector<std::int64_t> mult;
  mult.reserve(table->size());
  for (const auto& chi : table->irreducibles()) {
    const Cyclotomic m = inner_product(f, chi);
    if (!m.is_integer())
      throw Error(ErrorCode::NotVirtual, "multiplicity " + m.to_string() + " is not an integer");
    mult.push_back(m.integer_value());
  }
  return VirtualCharacter(table, std::move(mult));
}

bool is_effective(const VirtualCharacter& v) {
  return std::all_of(v.multiplicities().begin(), v.multiplicities().end(),
                     [](std::int64_t m) { return m >= 0; });
}

// ---------------------------------------------------------------------------
// Induction and restriction

std::vector<Permutation> left_transversal(const PermGroup& parent, const PermGroup& sub) {
  std::vector<bool> covered(parent.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < parent.order(); ++i) {
    if (covered[i]) continue;
    const Permutation& r = parent.element(i);
    reps.push_back(r);
    for (const auto& h : sub.elements()) covered[*parent.index_of(r * h)] = true;
  }
  return reps;
}

ClassFunction induce(const GroupPtr& sub, const GroupPtr& parent, const ClassFunction& f,
                     const std::vector<Permutation>* transversal) {
  if (!sub->is_subgroup_of(*parent))
    throw Error(ErrorCode::NotASubgroup, "induction source is not a subgroup of the target");
  if (f.values().size() != sub->class_count())
    throw Error(ErrorCode::SizeMismatch, "class function does not live on the subgroup");
  std::vector<Permutation> own;
  if (!transversal) {
    own = left_transversal(*parent, *sub);
    transversal = &own;
  }
  if (transversal->size() * sub->order() != parent->order())
    throw Error(ErrorCode::InvalidArgument, "transversal has the wrong size");
  std::vector<Permutation> inverses;
  inverses.reserve(transversal->size());
  for (const auto& r : *transversal) inverses.push_back(r.inverse());

  std::vector<Cyclotomic> values;
  values.reserve(parent->class_count());
  for (std::size_t c = 0; c < parent->class_count(); ++c) {
    const Permutation& u = parent->class_representative(c);
    Cyclotomic sum;
    for (std::size_t i = 0; i < transversal->size(); ++i) {
      const Permutation conj = inverses[i] * u * (*transversal)[i];
      if (auto idx = sub->index_of(conj)) sum += f.at_class(sub->class_of_index(*idx));
    }
    values.push_back(std::move(sum));
  }
  return ClassFunction(parent, std::move(values));
}

ClassFunction restrict(const GroupPtr& parent, const GroupPtr& sub, const ClassFunction& f) {
  if (!sub->is_subgroup_of(*parent))
    throw Error(ErrorCode::NotASubgroup, "restriction target is not a subgroup of the source");
  if (f.values().size() != parent->class_count())
    throw Error(ErrorCode::SizeMismatch, "class function does not live on the parent group");
  return ClassFunction::from_function(sub, [&](const Permutation& x) { return f.at(x); });
}

std::optional<std::vector<std::size_t>> align_irreducibles(
    const CharacterTable& ours, const std::vector<std::vector<Cyclotomic>>& reference) {
  if (reference.size() != ours.size()) return std::nullopt;
  std::vector<std::size_t> perm(reference.size());
  std::vector<bool> used(ours.size(), false);
  for (std::size_t r = 0; r < reference.size(); ++r) {
    bool matched = false;
    for (std::size_t i = 0; i < ours.size(); ++i) {
      if (used[i] || ours.irreducible(i).values() != reference[r]) continue;
      used[i] = true;
      perm[r] = i;
      matched = true;
      break;
    }
    if (!matched) return std::nullopt;
  }
  return perm;
}

}  // namespace eqgamma
