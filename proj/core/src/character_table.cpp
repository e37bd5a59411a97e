#include "covhom/character_table.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "covhom/error.hpp"

namespace covhom {

namespace {

// Arithmetic in F_p for the modular stage of Dixon's method.
struct Fp {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return ((a - b) % p + p) % p; }
  long mul(long a, long b) const { return static_cast<long>((static_cast<long long>(a) * b) % p); }
  long pow(long a, long k) const {
    long acc = 1 % p;
    a %= p;
    if (a < 0) a += p;
    while (k > 0) {
      if (k & 1) acc = mul(acc, a);
      a = mul(a, a);
      k >>= 1;
    }
    return acc;
  }
  long inv(long a) const { return pow(a, p - 2); }
};

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p = 1 (mod e) with p^2 > 4n, so degrees and multiplicities
// lift uniquely from their residues.
long dixon_prime(long e, long n) {
  for (long p = e + 1;; p += e) {
    if (static_cast<long long>(p) * p > 4LL * n && is_prime(p)) return p;
  }
}

long primitive_root_of_unity(const Fp& fp, long e) {
  // Generator of F_p^*, found by checking maximal proper orders.
  std::vector<long> prime_factors;
  long rest = fp.p - 1;
  for (long q = 2; rest > 1; ++q) {
    if (rest % q != 0) continue;
    prime_factors.push_back(q);
    while (rest % q == 0) rest /= q;
  }
  long g = 2;
  for (;; ++g) {
    bool generator = true;
    for (long q : prime_factors)
      if (fp.pow(g, (fp.p - 1) / q) == 1) {
        generator = false;
        break;
      }
    if (generator) break;
  }
  return fp.pow(g, (fp.p - 1) / e);
}

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;  // Mat[row][col]

// Column-reduce in place: returns (independent columns, pivot rows) with the
// submatrix on pivot rows equal to the identity.
std::pair<Mat, std::vector<int>> rcef(const Fp& fp, const std::vector<Vec>& columns) {
  std::vector<Vec> cols = columns;
  Mat basis;
  std::vector<int> pivots;
  for (auto& col : cols) {
    // Reduce against the accepted columns.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const long c = col[static_cast<std::size_t>(pivots[k])];
      if (c == 0) continue;
      for (std::size_t r = 0; r < col.size(); ++r)
        col[r] = fp.sub(col[r], fp.mul(c, basis[k][r]));
    }
    int pivot = -1;
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    const long scale = fp.inv(col[static_cast<std::size_t>(pivot)]);
    for (auto& v : col) v = fp.mul(v, scale);
    // Clear the new pivot row from the earlier columns.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const long c = basis[k][static_cast<std::size_t>(pivot)];
      if (c == 0) continue;
      for (std::size_t r = 0; r < col.size(); ++r)
        basis[k][r] = fp.sub(basis[k][r], fp.mul(c, col[r]));
    }
    basis.push_back(col);
    pivots.push_back(pivot);
  }
  // Keep pivot rows ascending for determinism.
  std::vector<std::size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  Mat sorted_basis;
  std::vector<int> sorted_pivots;
  for (auto i : idx) {
    sorted_basis.push_back(basis[i]);
    sorted_pivots.push_back(pivots[i]);
  }
  return {sorted_basis, sorted_pivots};
}

// Null space of the square matrix M.
std::vector<Vec> nullspace(const Fp& fp, Mat M) {
  const std::size_t d = M.size();
  std::vector<int> pivot_col_of_row;
  std::vector<char> is_pivot_col(d, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t sel = row;
    while (sel < d && M[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(M[sel], M[row]);
    const long scale = fp.inv(M[row][col]);
    for (auto& v : M[row]) v = fp.mul(v, scale);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || M[r][col] == 0) continue;
      const long c = M[r][col];
      for (std::size_t j = 0; j < d; ++j) M[r][j] = fp.sub(M[r][j], fp.mul(c, M[row][j]));
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot_col[col] = 1;
    ++row;
  }
  std::vector<Vec> kernel;
  for (std::size_t free_col = 0; free_col < d; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    Vec v(d, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = fp.sub(0, M[r][free_col]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

struct Space {
  Mat basis;  // columns of length r, reduced with identity on pivot rows
  std::vector<int> pivots;
  std::size_t dim() const { return basis.size(); }
};

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {
  degrees_.reserve(irreducibles_.size());
  for (const auto& chi : irreducibles_) degrees_.push_back(chi.at_identity().integer_value());
}

TablePtr CharacterTable::of(const GroupPtr& group) {
  static std::mutex mutex;
  static std::map<const FiniteGroup*, std::pair<std::weak_ptr<const FiniteGroup>, TablePtr>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(group.get());
    if (it != cache.end() && it->second.first.lock() == group) return it->second.second;
  }

  const auto& G = *group;
  const long n = G.order();
  const int r = G.class_count();
  const long e = G.exponent();
  const Fp fp{dixon_prime(e, n)};

  // Class-algebra structure constants: A_i[j][k] counts x in C_i with
  // x^{-1} z_k in C_j; the common eigenvectors carry the central characters.
  std::vector<Mat> class_matrix(static_cast<std::size_t>(r),
                                Mat(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(r), 0)));
  for (int k = 0; k < r; ++k) {
    const Elem zk = G.conjugacy_class(k).rep;
    for (Elem x = 0; x < n; ++x) {
      const int i = G.class_of(x);
      const int j = G.class_of(G.mul(G.inv(x), zk));
      ++class_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
  }
  for (auto& M : class_matrix)
    for (auto& row : M)
      for (auto& v : row) v %= fp.p;

  // Split the class space into common eigenlines.
  std::vector<Space> spaces;
  {
    Space full;
    for (int j = 0; j < r; ++j) {
      Vec col(static_cast<std::size_t>(r), 0);
      col[static_cast<std::size_t>(j)] = 1;
      full.basis.push_back(std::move(col));
      full.pivots.push_back(j);
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < r; ++i) {
    bool all_lines = true;
    for (const auto& s : spaces)
      if (s.dim() > 1) all_lines = false;
    if (all_lines) break;

    std::vector<Space> next;
    for (auto& space : spaces) {
      const std::size_t d = space.dim();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Restriction of A_i to the space, in basis coordinates.
      const auto apply = [&](const Vec& col) {
        Vec out(static_cast<std::size_t>(r), 0);
        for (int row = 0; row < r; ++row) {
          long acc = 0;
          const auto& mrow = class_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)];
          for (int c = 0; c < r; ++c)
            if (col[static_cast<std::size_t>(c)] != 0)
              acc = fp.add(acc, fp.mul(mrow[static_cast<std::size_t>(c)], col[static_cast<std::size_t>(c)]));
          out[static_cast<std::size_t>(row)] = acc;
        }
        return out;
      };
      Mat R(d, Vec(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        const Vec image = apply(space.basis[c]);
        Vec coords(d, 0);
        for (std::size_t k = 0; k < d; ++k)
          coords[k] = image[static_cast<std::size_t>(space.pivots[k])];
        // The space is invariant, so the pivot coordinates determine the image.
        Vec recon(static_cast<std::size_t>(r), 0);
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row)
            recon[row] = fp.add(recon[row], fp.mul(coords[k], space.basis[k][row]));
        check_internal(recon == image, "class matrix must preserve the split subspace");
        for (std::size_t k = 0; k < d; ++k) R[k][c] = coords[k];
      }
      std::size_t found = 0;
      for (long lambda = 0; lambda < fp.p && found < d; ++lambda) {
        Mat shifted = R;
        for (std::size_t k = 0; k < d; ++k) shifted[k][k] = fp.sub(shifted[k][k], lambda);
        const auto kernel = nullspace(fp, std::move(shifted));
        if (kernel.empty()) continue;
        found += kernel.size();
        std::vector<Vec> cols;
        for (const auto& kv : kernel) {
          Vec col(static_cast<std::size_t>(r), 0);
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row)
              col[row] = fp.add(col[row], fp.mul(kv[k], space.basis[k][row]));
          cols.push_back(std::move(col));
        }
        auto [basis, pivots] = rcef(fp, cols);
        next.push_back(Space{std::move(basis), std::move(pivots)});
      }
      check_internal(found == d, "class matrix restriction must be diagonalizable");
    }
    spaces = std::move(next);
  }
  check_internal(static_cast<int>(spaces.size()) == r, "expected one eigenline per class");

  // Central characters, normalized at the identity class.
  std::vector<Vec> omegas;
  for (const auto& space : spaces) {
    check_internal(space.dim() == 1, "eigenspaces must be lines");
    Vec v = space.basis[0];
    check_internal(v[0] != 0, "central character must be nonzero at the identity class");
    const long scale = fp.inv(v[0]);
    for (auto& x : v) x = fp.mul(x, scale);
    omegas.push_back(std::move(v));
  }

  std::vector<long> class_size_inv(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    class_size_inv[static_cast<std::size_t>(j)] = fp.inv(G.conjugacy_class(j).size() % fp.p);
  std::vector<int> inverse_class(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) inverse_class[static_cast<std::size_t>(j)] = G.inverse_class(j);

  // Power maps feed the discrete Fourier lift of each value.
  std::vector<std::vector<int>> power_class(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(e)));
  for (int j = 0; j < r; ++j)
    for (long b = 0; b < e; ++b)
      power_class[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] = G.power_class(j, b);

  const long z = primitive_root_of_unity(fp, e);
  std::vector<long> zpow(static_cast<std::size_t>(e));
  for (long t = 0; t < e; ++t) zpow[static_cast<std::size_t>(t)] = fp.pow(z, t);
  const long e_inv = fp.inv(e % fp.p);

  std::vector<ClassFunction> rows;
  for (const auto& omega : omegas) {
    long T = 0;
    for (int j = 0; j < r; ++j)
      T = fp.add(T, fp.mul(fp.mul(omega[static_cast<std::size_t>(j)],
                                  omega[static_cast<std::size_t>(inverse_class[static_cast<std::size_t>(j)])]),
                           class_size_inv[static_cast<std::size_t>(j)]));
    const long deg_sq = fp.mul(n % fp.p, fp.inv(T));
    long degree = 0;
    for (long t = 1; static_cast<long long>(t) * t <= n; ++t)
      if (fp.mul(t % fp.p, t % fp.p) == deg_sq) {
        degree = t;
        break;
      }
    check_internal(degree > 0, "character degree must lift below sqrt(|G|)");

    Vec value_mod(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      value_mod[static_cast<std::size_t>(j)] =
          fp.mul(fp.mul(degree % fp.p, omega[static_cast<std::size_t>(j)]),
                 class_size_inv[static_cast<std::size_t>(j)]);

    std::vector<Cyclo> values;
    values.reserve(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      Cyclo value;
      for (long a = 0; a < e; ++a) {
        long m = 0;
        for (long b = 0; b < e; ++b) {
          const long f = value_mod[static_cast<std::size_t>(
              power_class[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)])];
          const long zexp = ((e - a) * b) % e;
          m = fp.add(m, fp.mul(f, zpow[static_cast<std::size_t>(zexp)]));
        }
        m = fp.mul(m, e_inv);
        check_internal(m <= degree, "root-of-unity multiplicity must stay below the degree");
        if (m != 0) value += Cyclo(rat(m)) * Cyclo::zeta(e, a);
      }
      values.push_back(std::move(value));
    }
    rows.emplace_back(group, std::move(values));
  }

  // Trivial character first, then ascending degree with the Cyclo value
  // order breaking ties.
  const auto triv = trivial_character(group);
  std::stable_sort(rows.begin(), rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    const bool ta = a == triv;
    const bool tb = b == triv;
    if (ta != tb) return ta;
    const long da = a.at_identity().integer_value();
    const long db = b.at_identity().integer_value();
    if (da != db) return da < db;
    for (int j = 0; j < a.size(); ++j) {
      const int c = Cyclo::order3(a.value(j), b.value(j));
      if (c != 0) return c < 0;
    }
    return false;
  });
  check_internal(!rows.empty() && rows.front() == triv, "first irreducible must be trivial");

  auto table = std::shared_ptr<const CharacterTable>(new CharacterTable(group, std::move(rows)));

  long degree_sum = 0;
  for (int i = 0; i < table->rows(); ++i) degree_sum += table->degree(i) * table->degree(i);
  check_internal(degree_sum == n, "degrees must satisfy sum of squares = |G|");
  for (int i = 0; i < table->rows(); ++i)
    for (int j = i; j < table->rows(); ++j) {
      const Cyclo ip = inner_product(table->irreducible(i), table->irreducible(j));
      check_internal(ip == Cyclo(rat(i == j ? 1 : 0)), "irreducible rows must be orthonormal");
    }

  std::lock_guard<std::mutex> lock(mutex);
  for (auto it = cache.begin(); it != cache.end();)
    it = it->second.first.expired() ? cache.erase(it) : std::next(it);
  cache[group.get()] = {group, table};
  return table;
}

ModuleExpr::ModuleExpr(TablePtr table, std::vector<long> multiplicities)
    : table_(std::move(table)), mult_(std::move(multiplicities)) {
  check_internal(static_cast<int>(mult_.size()) == table_->rows(),
                 "module expression must list one multiplicity per irreducible");
  for (long m : mult_)
    if (m < 0) fail_guard("NegativeMultiplicity", "module multiplicity " + std::to_string(m));
}

long ModuleExpr::dim() const {
  long d = 0;
  for (int i = 0; i < table_->rows(); ++i) d += mult_[static_cast<std::size_t>(i)] * table_->degree(i);
  return d;
}

ClassFunction ModuleExpr::character() const {
  ClassFunction acc = trivial_character(table_->group()).scaled(0);
  for (int i = 0; i < table_->rows(); ++i)
    if (mult_[static_cast<std::size_t>(i)] != 0)
      acc = acc + table_->irreducible(i).scaled(mult_[static_cast<std::size_t>(i)]);
  return acc;
}

bool ModuleExpr::operator==(const ModuleExpr& rhs) const {
  return table_->group().get() == rhs.table_->group().get() && mult_ == rhs.mult_;
}

std::string ModuleExpr::str() const {
  const int r = table_->rows();
  std::vector<long> rem = mult_;
  long rho_R = 0;
  long rho_z = 0;
  if (r > 1) {
    rho_R = rem[0];
    for (int i = 0; i < r; ++i) rho_R = std::min(rho_R, rem[static_cast<std::size_t>(i)] / table_->degree(i));
    for (int i = 0; i < r; ++i) rem[static_cast<std::size_t>(i)] -= rho_R * table_->degree(i);
    rho_z = rem[1] / table_->degree(1);
    for (int i = 1; i < r; ++i) rho_z = std::min(rho_z, rem[static_cast<std::size_t>(i)] / table_->degree(i));
    for (int i = 1; i < r; ++i) rem[static_cast<std::size_t>(i)] -= rho_z * table_->degree(i);
  }
  std::vector<std::string> terms;
  const auto push = [&](long k, const std::string& name) {
    if (k == 0) return;
    terms.push_back(k == 1 ? name : std::to_string(k) + "*" + name);
  };
  push(rho_R, "rho_R");
  push(rho_z, "rho_z");
  if (rem[0] != 0) terms.push_back(rem[0] == 1 ? "1" : std::to_string(rem[0]) + "*1");
  for (int i = 1; i < r; ++i) push(rem[static_cast<std::size_t>(i)], "chi_" + std::to_string(i + 1));
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

ModuleExpr ModuleExpr::regular_plus_trivial(const TablePtr& table, long k, long j) {
  std::vector<long> mult(static_cast<std::size_t>(table->rows()), 0);
  for (int i = 0; i < table->rows(); ++i) mult[static_cast<std::size_t>(i)] = k * table->degree(i);
  mult[0] += j;
  return ModuleExpr(table, std::move(mult));
}

ModuleExpr decompose(const TablePtr& table, const ClassFunction& chi) {
  if (table->group().get() != chi.group().get())
    fail("GroupMismatch", "character and table live on different groups");
  std::vector<long> mult;
  mult.reserve(static_cast<std::size_t>(table->rows()));
  for (int i = 0; i < table->rows(); ++i) {
    const Cyclo m = inner_product(chi, table->irreducible(i));
    if (!m.is_integer())
      fail("NotACharacter", "multiplicity of chi_" + std::to_string(i + 1) + " is " + m.str());
    const long v = m.integer_value();
    if (v < 0)
      fail("NotACharacter", "multiplicity of chi_" + std::to_string(i + 1) + " is negative: " + m.str());
    mult.push_back(v);
  }
  return ModuleExpr(table, std::move(mult));
}

long commutant_unitary_dim(const TablePtr& table, long i) {
  if (i < 1) fail("PreconditionViolated", "multiplicity must be positive");
  long sum = 0;
  for (int v = 0; v < table->rows(); ++v) {
    const long d = i * table->degree(v);
    sum += d * d;
  }
  check_internal(sum == i * i * table->group()->order(),
                 "commutant dimension must equal i^2 |G|");
  return sum;
}

}  // namespace covhom
