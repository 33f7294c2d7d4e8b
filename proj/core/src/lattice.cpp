#include "lva/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lva {

bool is_integral_vector(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integer(q); });
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector rank mismatch");
    LatticeVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector rank mismatch");
    LatticeVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

LatticeVector scale(const LatticeVector& a, const Rational& c) {
    LatticeVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

LatticeVector zero_vector(int rank) { return LatticeVector(rank, Rational(0)); }

namespace {

Integer integer_det(std::vector<std::vector<Integer>> m) {
    // fraction-free Gaussian elimination (Bareiss)
    const int n = static_cast<int>(m.size());
    Integer sign = 1, prev = 1;
    for (int col = 0; col < n - 1; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

Lattice::Lattice(std::vector<std::vector<Integer>> gram, Integer det)
    : rank_(static_cast<int>(gram.size())), gram_(std::move(gram)), det_(std::move(det)) {}

LatticePtr Lattice::make(std::vector<std::vector<Integer>> gram) {
    const int d = static_cast<int>(gram.size());
    if (d == 0) throw std::invalid_argument("lattice rank must be positive");
    for (auto& row : gram)
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("Gram matrix must be square");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("Gram matrix must be symmetric");
    for (int i = 0; i < d; ++i)
        if (gram[i][i] % 2 != 0)
            throw std::invalid_argument(
                "odd lattice (odd Gram diagonal): only even lattices are supported");
    Integer det = integer_det(gram);
    if (det == 0) throw std::invalid_argument("degenerate lattice: det(Gram) = 0");
    return LatticePtr(new Lattice(std::move(gram), std::move(det)));
}

Rational Lattice::pairing(const LatticeVector& u, const LatticeVector& v) const {
    if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
        throw std::invalid_argument("pairing: rank mismatch");
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < rank_; ++j) row += Rational(gram_[i][j]) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

int Lattice::epsilon(const LatticeVector& u, const LatticeVector& v) const {
    if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
        throw std::invalid_argument("epsilon: rank mismatch");
    if (!is_integral_vector(u) || !is_integral_vector(v))
        throw std::invalid_argument("epsilon requires integer coordinates");
    // bimultiplicative extension of the base table: only the i > j entries
    // carry a sign, with exponent <e_i, e_j>
    Integer exponent = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < i; ++j) {
            if (v[j] == 0) continue;
            exponent += numerator(u[i]) * numerator(v[j]) * gram_[i][j];
        }
    }
    return (exponent % 2 == 0) ? 1 : -1;
}

bool Lattice::dual_membership(const LatticeVector& gamma) const {
    if (static_cast<int>(gamma.size()) != rank_) return false;
    for (int i = 0; i < rank_; ++i) {
        Rational p = 0;
        for (int j = 0; j < rank_; ++j) p += Rational(gram_[i][j]) * gamma[j];
        if (!is_integer(p)) return false;
    }
    return true;
}

namespace {

// Smith normal form of A: returns the diagonal and Minv with
// A Z^d = Minv D Z^d (Minv unimodular).
void smith_diagonal(std::vector<std::vector<Integer>> a, std::vector<Integer>& diag,
                    std::vector<std::vector<Integer>>& minv) {
    const int n = static_cast<int>(a.size());
    minv.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) minv[i][i] = 1;

    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < n; ++r) std::swap(minv[r][i], minv[r][j]);
    };
    auto row_add = [&](int i, int j, const Integer& k) {
        // row i += k * row j; minv col j -= k * col i
        for (int c = 0; c < n; ++c) a[i][c] += k * a[j][c];
        for (int r = 0; r < n; ++r) minv[r][j] -= k * minv[r][i];
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < n; ++c) a[i][c] = -a[i][c];
        for (int r = 0; r < n; ++r) minv[r][i] = -minv[r][i];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto col_add = [&](int i, int j, const Integer& k) {
        for (int r = 0; r < n; ++r) a[r][i] += k * a[r][j];
    };
    auto col_neg = [&](int i) {
        for (int r = 0; r < n; ++r) a[r][i] = -a[r][i];
    };

    for (int t = 0; t < n; ++t) {
        // move a nonzero pivot to (t,t)
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;  // nonsingular input never gets here
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                row_add(i, t, -q);
                if (a[i][t] != 0) {
                    row_swap(i, t);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                col_add(j, t, -q);
                if (a[t][j] != 0) {
                    col_swap(j, t);
                    dirty = true;
                }
            }
        }
        if (a[t][t] < 0) {
            row_neg(t);
        }
        (void)col_neg;
    }
    diag.resize(n);
    for (int i = 0; i < n; ++i) diag[i] = a[i][i];
}

// Solve G x = b over the rationals (G nonsingular).
LatticeVector solve_gram(const std::vector<std::vector<Integer>>& g, const LatticeVector& b) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rational(g[i][j]);
        m[i][n] = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular Gram matrix in solve");
        std::swap(m[pivot], m[col]);
        Rational inv = Rational(1) / m[col][col];
        for (int c = col; c <= n; ++c) m[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    LatticeVector x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

Rational frac_part(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);
    Integer r = num % den;
    if (r < 0) r += den;
    return Rational(r, den);
}

} // namespace

std::vector<LatticeVector> Lattice::dual_coset_reps() const {
    // L dual / L is Z^d / G Z^d carried through G^{-1}; the quotient is read
    // off the Smith normal form G Z^d = Minv D Z^d.
    std::vector<Integer> diag;
    std::vector<std::vector<Integer>> minv;
    smith_diagonal(gram_, diag, minv);
    const int n = rank_;
    std::vector<LatticeVector> reps;
    std::vector<Integer> t(n, 0);
    bool done = false;
    while (!done) {
        LatticeVector x(n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x[i] += Rational(minv[i][j] * t[j]);
        LatticeVector gamma = solve_gram(gram_, x);
        for (auto& c : gamma) c = frac_part(c);
        reps.push_back(std::move(gamma));
        // odometer over prod [0, diag_i)
        done = true;
        for (int i = 0; i < n; ++i) {
            Integer d = diag[i] < 0 ? -diag[i] : diag[i];
            if (++t[i] < d) {
                done = false;
                break;
            }
            t[i] = 0;
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

} // namespace lva
