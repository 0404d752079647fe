#include "exc/linalg_exact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace exc {

namespace {

// pivot weight: bit size of |num| * den, smaller is simpler
std::size_t pivot_weight(const Rat& x) {
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) + mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

}  // namespace

std::vector<std::size_t> rref(MatQ& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // simplest nonzero entry in column c at or below row r
        std::size_t best = rows;
        std::size_t best_w = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            std::size_t w = pivot_weight(m(i, c));
            if (best == rows || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(best, j));
        Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(MatQ m) { return rref(m).size(); }

std::vector<std::vector<Rat>> nullspace(const MatQ& m) {
    MatQ a = m;
    std::vector<std::size_t> piv = rref(a);
    const std::size_t cols = m.cols();
    std::vector<bool> is_piv(cols, false);
    for (std::size_t c : piv) is_piv[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

MatQ inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
    const std::size_t n = m.rows();
    MatQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("inverse: singular matrix");
    MatQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<std::vector<Rat>> eigenspace_involution(const MatQ& t, int sign) {
    if (t.rows() != t.cols()) throw std::invalid_argument("eigenspace_involution: not square");
    if (!(t * t == MatQ::identity(t.rows())))
        throw std::invalid_argument("eigenspace_involution: not an involution");
    MatQ shifted = t;
    for (std::size_t i = 0; i < t.rows(); ++i) shifted(i, i) -= Rat(sign);
    return nullspace(shifted);
}

// ------------------------------------------------------------- sparse rows

SparseVec SparseVec::from_dense(const std::vector<Rat>& v) {
    SparseVec s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0) s.e.emplace_back(static_cast<std::uint32_t>(j), v[j]);
    return s;
}

std::vector<Rat> SparseVec::to_dense(std::size_t n) const {
    std::vector<Rat> v(n, Rat(0));
    for (const auto& [c, x] : e) v[c] = x;
    return v;
}

void SparseVec::normalize() {
    if (e.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& [c, x] : e) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [c, x] : e) {
        mpz_class n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(e.front().second) < 0) scale = -scale;
    for (auto& [c, x] : e) {
        x *= scale;
        x.canonicalize();
    }
}

void axpy(SparseVec& r, const Rat& c, const SparseVec& p) {
    SparseVec out;
    out.e.reserve(r.e.size() + p.e.size());
    std::size_t i = 0, j = 0;
    while (i < r.e.size() || j < p.e.size()) {
        if (j == p.e.size() || (i < r.e.size() && r.e[i].first < p.e[j].first)) {
            out.e.push_back(std::move(r.e[i++]));
        } else if (i == r.e.size() || p.e[j].first < r.e[i].first) {
            out.e.emplace_back(p.e[j].first, -c * p.e[j].second);
            ++j;
        } else {
            Rat v = r.e[i].second - c * p.e[j].second;
            if (sgn(v) != 0) out.e.emplace_back(r.e[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

SparseVec SparseSpan::reduce(SparseVec row, std::vector<std::pair<std::uint32_t, Rat>>* comb) const {
    while (!row.empty()) {
        std::uint32_t lead = row.lead();
        if (lead >= lead_to_row_.size() || lead_to_row_[lead] < 0) break;
        const Row& p = rows_[static_cast<std::size_t>(lead_to_row_[lead])];
        Rat c = row.lead_val() / p.v.lead_val();
        if (comb)
            for (const auto& [g, w] : p.comb) comb->emplace_back(g, c * w);
        axpy(row, c, p.v);
    }
    // the row may still contain columns behind other pivots; clear them too
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < row.e.size();) {
            std::uint32_t c = row.e[k].first;
            if (c < lead_to_row_.size() && lead_to_row_[c] >= 0) {
                const Row& p = rows_[static_cast<std::size_t>(lead_to_row_[c])];
                Rat f = row.e[k].second / p.v.lead_val();
                if (comb)
                    for (const auto& [g, w] : p.comb) comb->emplace_back(g, f * w);
                axpy(row, f, p.v);
                changed = true;
            } else {
                ++k;
            }
        }
    }
    return row;
}

bool SparseSpan::insert(SparseVec row) {
    std::vector<std::pair<std::uint32_t, Rat>> comb;
    std::uint32_t gen = static_cast<std::uint32_t>(n_gens_++);
    SparseVec res = reduce(std::move(row), track_ ? &comb : nullptr);
    if (res.empty()) return false;

    Row stored;
    if (track_) {
        // res = gen - sum comb; rescale after normalization below
        std::map<std::uint32_t, Rat> acc;
        acc[gen] = Rat(1);
        for (auto& [g, w] : comb) acc[g] -= w;
        Rat lead_before = res.lead_val();
        res.normalize();
        Rat scale = res.lead_val() / lead_before;
        for (auto& [g, w] : acc) {
            Rat v = w * scale;
            if (sgn(v) != 0) stored.comb.emplace_back(g, std::move(v));
        }
    } else {
        res.normalize();
    }
    if (lead_to_row_.size() < ncols_) lead_to_row_.assign(ncols_, -1);
    lead_to_row_[res.lead()] = static_cast<std::int64_t>(rows_.size());
    stored.v = std::move(res);
    rows_.push_back(std::move(stored));
    return true;
}

bool SparseSpan::in_span(SparseVec row) const {
    if (rows_.empty()) return row.empty();
    return reduce(std::move(row), nullptr).empty();
}

std::optional<std::vector<Rat>> SparseSpan::coords_in(SparseVec row) const {
    if (!track_) return std::nullopt;
    std::vector<std::pair<std::uint32_t, Rat>> comb;
    SparseVec res = reduce(std::move(row), &comb);
    if (!res.empty()) return std::nullopt;
    std::vector<Rat> out(n_gens_, Rat(0));
    for (const auto& [g, w] : comb) out[g] += w;
    return out;
}

// --------------------------------------------------------- sparse nullspace

namespace {

struct Echelon {
    std::size_t ncols;
    std::vector<std::int64_t> lead_to_row;
    std::vector<SparseVec> rows;

    explicit Echelon(std::size_t n) : ncols(n), lead_to_row(n, -1) {}

    void insert(SparseVec row) {
        while (!row.empty()) {
            std::int64_t p = lead_to_row[row.lead()];
            if (p < 0) {
                row.normalize();
                lead_to_row[row.lead()] = static_cast<std::int64_t>(rows.size());
                rows.push_back(std::move(row));
                return;
            }
            const SparseVec& pr = rows[static_cast<std::size_t>(p)];
            Rat c = row.lead_val() / pr.lead_val();
            axpy(row, c, pr);
        }
    }
};

}  // namespace

std::vector<std::vector<Rat>> sparse_nullspace(const std::vector<SparseVec>& in_rows, std::size_t ncols) {
    Echelon ech(ncols);
    for (const SparseVec& r : in_rows) ech.insert(r);

    // densify the pivot rows and back-eliminate to full RREF
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < ncols; ++c)
        if (ech.lead_to_row[c] >= 0) piv.push_back(c);

    std::size_t nr = piv.size();
    std::vector<std::vector<Rat>> rr(nr);
    std::vector<std::int64_t> pivcol_to_idx(ncols, -1);
    for (std::size_t k = 0; k < nr; ++k) {
        rr[k] = ech.rows[static_cast<std::size_t>(ech.lead_to_row[piv[k]])].to_dense(ncols);
        pivcol_to_idx[piv[k]] = static_cast<std::int64_t>(k);
    }
    for (std::size_t ki = nr; ki-- > 0;) {
        // normalize pivot to 1
        Rat inv = Rat(1) / rr[ki][piv[ki]];
        for (auto& x : rr[ki])
            if (sgn(x) != 0) x *= inv;
        // eliminate this pivot column from earlier rows
        for (std::size_t kj = 0; kj < ki; ++kj) {
            Rat f = rr[kj][piv[ki]];
            if (sgn(f) == 0) continue;
            for (std::size_t c = piv[ki]; c < ncols; ++c)
                if (sgn(rr[ki][c]) != 0) rr[kj][c] -= f * rr[ki][c];
        }
    }

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (pivcol_to_idx[f] >= 0) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < nr; ++k) v[piv[k]] = -rr[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t sparse_rank(const std::vector<SparseVec>& rows, std::size_t ncols) {
    Echelon ech(ncols);
    for (const SparseVec& r : rows) ech.insert(r);
    return ech.rows.size();
}

// ------------------------------------------------------------ modular rank

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

// rank over F_p; returns nullopt if some denominator vanishes mod p
std::optional<std::size_t> rank_mod_p(const MatQ& m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat& x = m(i, j);
            if (sgn(x) == 0) continue;
            std::uint64_t den = mpz_mod_u(x.get_den(), p);
            if (den == 0) return std::nullopt;
            std::uint64_t num = mpz_mod_u(x.get_num(), p);
            a[i][j] = num * pow_mod(den, p - 2, p) % p;
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace

namespace {

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;  // sorted, values in (0, p)

// r -= c * piv (mod p), sorted merge
ModRow mod_axpy(const ModRow& r, std::uint64_t c, const ModRow& piv, std::uint64_t p) {
    ModRow out;
    out.reserve(r.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < piv.size()) {
        if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || piv[j].first < r[i].first) {
            std::uint64_t v = (p - c * piv[j].second % p) % p;
            if (v != 0) out.emplace_back(piv[j].first, v);
            ++j;
        } else {
            std::uint64_t v = (r[i].second + p - c * piv[j].second % p) % p;
            if (v != 0) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<std::size_t> sparse_rank_mod_p(const std::vector<SparseVec>& rows, std::size_t ncols,
                                             std::uint64_t p) {
    std::vector<std::int64_t> lead(ncols, -1);
    std::vector<ModRow> stored;
    for (const SparseVec& sr : rows) {
        ModRow row;
        row.reserve(sr.e.size());
        for (const auto& [c, x] : sr.e) {
            std::uint64_t den = mpz_mod_u(x.get_den(), p);
            if (den == 0) return std::nullopt;
            std::uint64_t v = mpz_mod_u(x.get_num(), p) * pow_mod(den, p - 2, p) % p;
            if (v != 0) row.emplace_back(c, v);
        }
        while (!row.empty()) {
            std::int64_t pv = lead[row.front().first];
            if (pv < 0) {
                lead[row.front().first] = static_cast<std::int64_t>(stored.size());
                stored.push_back(std::move(row));
                break;
            }
            const ModRow& piv = stored[static_cast<std::size_t>(pv)];
            std::uint64_t c = row.front().second * pow_mod(piv.front().second, p - 2, p) % p;
            row = mod_axpy(row, c, piv, p);
        }
    }
    return stored.size();
}

}  // namespace

ModularRank sparse_modular_rank(const std::vector<SparseVec>& rows, std::size_t ncols,
                                const std::vector<std::uint32_t>& primes) {
    ModularRank out;
    for (std::uint32_t p : primes) {
        auto r = sparse_rank_mod_p(rows, ncols, p);
        if (r) out.per_prime.push_back(*r);
    }
    bool agree = !out.per_prime.empty();
    for (std::size_t k = 1; k < out.per_prime.size(); ++k)
        if (out.per_prime[k] != out.per_prime[0]) agree = false;
    if (agree) {
        out.value = out.per_prime[0];
        out.exact_fallback = false;
    } else {
        out.value = sparse_rank(rows, ncols);
        out.exact_fallback = true;
    }
    return out;
}

ModularRank modular_rank(const MatQ& m, const std::vector<std::uint32_t>& primes) {
    ModularRank out;
    for (std::uint32_t p : primes) {
        auto r = rank_mod_p(m, p);
        if (r) out.per_prime.push_back(*r);
    }
    bool agree = !out.per_prime.empty();
    for (std::size_t k = 1; k < out.per_prime.size(); ++k)
        if (out.per_prime[k] != out.per_prime[0]) agree = false;
    if (agree) {
        out.value = out.per_prime[0];
        out.exact_fallback = false;
    } else {
        out.value = rank(m);
        out.exact_fallback = true;
    }
    return out;
}

// ----------------------------------------------------------- symmetric form

Signature sym_signature(MatQ m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("sym_signature: not square");
    const std::size_t n = m.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            // try to bring a nonzero onto the diagonal by congruence
            std::size_t sel = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (sgn(m(j, j)) != 0) {
                    sel = j;
                    break;
                }
            if (sel < n) {
                for (std::size_t t = 0; t < n; ++t) std::swap(m(k, t), m(sel, t));
                for (std::size_t t = 0; t < n; ++t) std::swap(m(t, k), m(t, sel));
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (sgn(m(k, j)) != 0) {
                        off = j;
                        break;
                    }
                if (off == n) {
                    ++sig.zero;  // row/col k is zero on the trailing block
                    continue;
                }
                // row_k += row_off, col_k += col_off makes m(k,k) = 2 m(k,off)
                for (std::size_t t = 0; t < n; ++t) m(k, t) += m(off, t);
                for (std::size_t t = 0; t < n; ++t) m(t, k) += m(t, off);
            }
        }
        Rat d = m(k, k);
        (sgn(d) > 0 ? sig.pos : sig.neg) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0) continue;
            Rat f = m(i, k) / d;
            for (std::size_t j = k; j < n; ++j)
                if (sgn(m(k, j)) != 0) m(i, j) -= f * m(k, j);
            for (std::size_t j = k; j < n; ++j) m(j, i) = m(i, j);  // keep symmetric
        }
    }
    return sig;
}

// ------------------------------------------------------------ span helpers

bool in_span(const std::vector<Rat>& v, const std::vector<std::vector<Rat>>& basis) {
    if (basis.empty()) {
        for (const Rat& x : v)
            if (sgn(x) != 0) return false;
        return true;
    }
    SparseSpan span(basis.front().size());
    for (const auto& b : basis) span.insert(b);
    return span.in_span(v);
}

bool span_equal(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
    if (a.empty() && b.empty()) return true;
    std::size_t n = (a.empty() ? b : a).front().size();
    SparseSpan sa(n), sb(n);
    for (const auto& r : a) sa.insert(r);
    for (const auto& r : b) sb.insert(r);
    if (sa.rank() != sb.rank()) return false;
    for (const auto& r : b)
        if (!sa.in_span(r)) return false;
    for (const auto& r : a)
        if (!sb.in_span(r)) return false;
    return true;
}

std::size_t rank_of_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return 0;
    SparseSpan s(rows.front().size());
    for (const auto& r : rows) s.insert(r);
    return s.rank();
}

std::vector<Rat> mat_to_vec(const MatQ& m) { return m.data(); }

MatQ vec_to_mat(const std::vector<Rat>& v, std::size_t n) {
    MatQ m(n, n);
    m.data() = v;
    return m;
}

}  // namespace exc
