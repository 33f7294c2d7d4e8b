#include "lva/sympoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lva {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::P: return "P";
        case Basis::H: return "H";
        case Basis::S: return "S";
    }
    throw std::logic_error("bad basis tag");
}

Basis basis_from_name(const std::string& name) {
    if (name == "P" || name == "p") return Basis::P;
    if (name == "H" || name == "h") return Basis::H;
    if (name == "S" || name == "s") return Basis::S;
    throw std::invalid_argument("unknown basis: " + name);
}

SymPoly SymPoly::monomial(Basis b, const Partition& key, const Rational& c) {
    SymPoly f(b);
    f.add_term(key, c);
    return f;
}

int SymPoly::max_degree() const {
    int d = 0;
    for (auto& [key, c] : terms_) d = std::max(d, key.weight());
    return d;
}

Rational SymPoly::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SymPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    if (basis_ != rhs.basis_) throw std::invalid_argument("basis mismatch in +");
    for (auto& [key, c] : rhs.terms_) add_term(key, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
    if (basis_ != rhs.basis_) throw std::invalid_argument("basis mismatch in -");
    for (auto& [key, c] : rhs.terms_) add_term(key, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

// Pieri rule: s_mu * h_n = sum of s_lambda over lambda obtained from mu by
// adding a horizontal strip of size n.
void pieri_accumulate(const Partition& mu, int n, const Rational& c, SymPoly& out) {
    const int rows = mu.length() + 1;
    std::vector<int> lam(rows, 0);
    std::function<void(int, int)> rec = [&](int row, int rem) {
        if (row == rows) {
            if (rem == 0) {
                std::vector<int> parts(lam.begin(), lam.end());
                std::erase(parts, 0);
                out.add_term(Partition(std::move(parts)), c);
            }
            return;
        }
        // lam[row] >= mu.part(row) (containment) and lam[row] <= mu.part(row-1)
        // (horizontal strip), rows beyond the first bounded above by previous lam.
        int lo = mu.part(row);
        int hi = (row == 0) ? mu.part(0) + rem : mu.part(row - 1);
        hi = std::min(hi, lo + rem);
        for (int v = lo; v <= hi; ++v) {
            lam[row] = v;
            rec(row + 1, rem - (v - lo));
        }
        lam[row] = 0;
    };
    rec(0, n);
}

SymPoly h_monomial_in_s(const Partition& mu) {
    SymPoly acc = SymPoly::one(Basis::S);
    for (int part : mu.parts()) {
        SymPoly next(Basis::S);
        for (auto& [lam, c] : acc.terms()) pieri_accumulate(lam, part, c, next);
        acc = std::move(next);
    }
    return acc;
}

} // namespace

SymPoly SymPoly::operator*(const SymPoly& rhs) const {
    if (basis_ != rhs.basis_) throw std::invalid_argument("basis mismatch in *");
    if (basis_ == Basis::S) {
        SymPoly lh = change_basis(*this, Basis::H);
        SymPoly rh = change_basis(rhs, Basis::H);
        return change_basis(lh * rh, Basis::S);
    }
    SymPoly out(basis_);
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : rhs.terms_) out.add_term(merge_parts(ka, kb), ca * cb);
    return out;
}

bool SymPoly::operator==(const SymPoly& rhs) const {
    if (basis_ == rhs.basis_) return terms_ == rhs.terms_;
    return terms_ == change_basis(rhs, basis_).terms();
}

bool SymPoly::is_integral() const {
    for (auto& [key, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    const char* gen = basis_ == Basis::P ? "p" : basis_ == Basis::H ? "h" : "s";
    std::ostringstream os;
    bool first = true;
    for (auto& [key, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && !key.empty();
        if (!unit) {
            os << numerator(a).str();
            if (denominator(a) != 1) os << "/" << denominator(a).str();
            if (!key.empty()) os << "*";
        }
        if (basis_ == Basis::S) {
            if (!key.empty()) {
                os << gen << "[";
                for (int i = 0; i < key.length(); ++i) os << (i ? "," : "") << key.parts()[i];
                os << "]";
            }
        } else {
            // group equal parts into powers
            const auto& parts = key.parts();
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                if (i) os << "*";
                os << gen << "[" << parts[i] << "]";
                if (j - i > 1) os << "^" << (j - i);
                i = j;
            }
        }
    }
    return os.str();
}

SymPoly h_in_p(int n) {
    if (n < 0) throw std::invalid_argument("h_in_p: n must be >= 0");
    static std::vector<SymPoly> cache;  // cache[n] = h_n in P
    if (cache.empty()) cache.push_back(SymPoly::one(Basis::P));
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        // m h_m = sum_{i=1}^{m} p_i h_{m-i}
        SymPoly acc(Basis::P);
        for (int i = 1; i <= m; ++i)
            acc += SymPoly::monomial(Basis::P, Partition{i}, 1) * cache[m - i];
        acc *= Rational(1, m);
        cache.push_back(std::move(acc));
    }
    return cache[n];
}

SymPoly p_in_h(int n) {
    if (n < 1) throw std::invalid_argument("p_in_h: n must be >= 1");
    static std::vector<SymPoly> cache;  // cache[n] = p_n in H, cache[0] unused
    if (cache.empty()) cache.push_back(SymPoly::zero(Basis::H));
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        // p_m = m h_m - sum_{i=1}^{m-1} p_i h_{m-i}
        SymPoly acc = SymPoly::monomial(Basis::H, Partition{m}, m);
        for (int i = 1; i < m; ++i)
            acc -= cache[i] * SymPoly::monomial(Basis::H, Partition{m - i}, 1);
        cache.push_back(std::move(acc));
    }
    return cache[n];
}

SymPoly jacobi_trudi(const Partition& lambda) {
    const int l = lambda.length();
    if (l == 0) return SymPoly::one(Basis::H);
    // det(h_{lambda_i + j - i}) over columns j, expanded over permutations;
    // entries are single h generators (or 0/1) so each product is a key merge.
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    SymPoly out(Basis::H);
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> parts;
        bool zero = false;
        for (int i = 0; i < l; ++i) {
            int m = lambda.parts()[i] - i + perm[i];
            if (m < 0) {
                zero = true;
                break;
            }
            if (m > 0) parts.push_back(m);
        }
        if (!zero)
            out.add_term(Partition::from_unsorted(std::move(parts)),
                         (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

SymPoly expand_key(Basis from, const Partition& key, Basis to) {
    switch (from) {
        case Basis::P: {
            SymPoly acc = SymPoly::one(Basis::H);
            for (int part : key.parts()) acc = acc * p_in_h(part);
            return to == Basis::H ? acc : change_basis(acc, to);
        }
        case Basis::H: {
            if (to == Basis::P) {
                SymPoly acc = SymPoly::one(Basis::P);
                for (int part : key.parts()) acc = acc * h_in_p(part);
                return acc;
            }
            return h_monomial_in_s(key);
        }
        case Basis::S: {
            SymPoly h = jacobi_trudi(key);
            return to == Basis::H ? h : change_basis(h, to);
        }
    }
    throw std::logic_error("bad basis tag");
}

} // namespace

SymPoly change_basis(const SymPoly& f, Basis target) {
    if (f.basis() == target) return f;
    SymPoly out(target);
    for (auto& [key, c] : f.terms()) {
        SymPoly e = expand_key(f.basis(), key, target);
        e *= c;
        out += e;
    }
    return out;
}

std::vector<std::vector<Rational>> transition_matrix(int deg, Basis from, Basis to) {
    if (deg < 1) throw std::invalid_argument("transition_matrix: deg must be >= 1");
    auto index = partitions_of(deg);
    const int n = static_cast<int>(index.size());
    std::map<Partition, int> row_of;
    for (int i = 0; i < n; ++i) row_of[index[i]] = i;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int col = 0; col < n; ++col) {
        SymPoly e = change_basis(SymPoly::monomial(from, index[col], 1), to);
        for (auto& [key, c] : e.terms()) {
            if (to == Basis::S) {
                m[row_of.at(key)][col] = c;
            } else {
                // in P/H the expansion can leave the single-generator keys;
                // every key is still a partition of deg
                m[row_of.at(key)][col] = c;
            }
        }
    }
    return m;
}

Rational matrix_det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

namespace {

// d/dp_n as a derivation on the P basis.
SymPoly ddp(int n, const SymPoly& f) {
    SymPoly out(Basis::P);
    for (auto& [key, c] : f.terms()) {
        const auto& parts = key.parts();
        int mult = static_cast<int>(std::count(parts.begin(), parts.end(), n));
        if (mult == 0) continue;
        std::vector<int> rest = parts;
        rest.erase(std::find(rest.begin(), rest.end(), n));
        out.add_term(Partition(std::move(rest)), c * mult);
    }
    return out;
}

} // namespace

SymPoly bernstein_mode(int m, const SymPoly& f) {
    SymPoly g = change_basis(f, Basis::P);
    const int deg = g.max_degree();
    // E^+(-alpha/2, z) g = exp(-sum_n (d/dp_n) z^{-n}) g, collected by the z
    // exponent -j. Apply exp(-d_n z^{-n}) for each n in turn; the whole thing
    // is finite since g has bounded degree.
    std::map<int, SymPoly> layers;
    layers.emplace(0, g);
    for (int n = 1; n <= deg; ++n) {
        std::map<int, SymPoly> next;
        for (auto& [j, u] : layers) {
            SymPoly d = u;
            Rational fact = 1;
            for (int k = 0; !d.is_zero(); ++k) {
                if (k > 0) fact *= k;
                SymPoly contrib = d * (Rational(k % 2 == 0 ? 1 : -1) / fact);
                auto [it, inserted] = next.emplace(j + n * k, contrib);
                if (!inserted) it->second += contrib;
                d = ddp(n, d);
            }
        }
        layers = std::move(next);
    }
    // Multiply by E^-(-alpha,z) = sum_k h_k z^k and take the z^{-m} coefficient.
    SymPoly out(Basis::P);
    for (auto& [j, u] : layers) {
        int k = j - m;
        if (k < 0 || u.is_zero()) continue;
        out += h_in_p(k) * u;
    }
    return out;
}

SymPoly schur_by_vertex(const Partition& lambda) {
    SymPoly u = SymPoly::one(Basis::P);
    const auto& parts = lambda.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        u = bernstein_mode(-*it, u);
    return u;
}

} // namespace lva
