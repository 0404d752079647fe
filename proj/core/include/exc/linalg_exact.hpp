#pragma once

// Exact rational linear algebra: RREF/rank/nullspace (dense and sparse),
// involution eigenspaces, span comparison, multi-prime modular rank and the
// exact signature of symmetric matrices. Everything here is deterministic;
// nullspace bases come out in RREF-canonical form.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "exc/matrix.hpp"
#include "exc/scalars.hpp"

namespace exc {

// in-place reduced row echelon form; returns the pivot columns.
// Pivot choice within a column: smallest |numerator * denominator| first.
std::vector<std::size_t> rref(MatQ& m);

std::size_t rank(MatQ m);

// basis of {v : Mv = 0}, one vector per free column, RREF-canonical
std::vector<std::vector<Rat>> nullspace(const MatQ& m);

MatQ inverse(const MatQ& m);  // throws std::domain_error if singular

// basis of {v : Tv = sign * v}; requires T*T == identity exactly
std::vector<std::vector<Rat>> eigenspace_involution(const MatQ& t, int sign);

// ------------------------------------------------------------- sparse rows

struct SparseVec {
    std::vector<std::pair<std::uint32_t, Rat>> e;  // sorted by column

    static SparseVec from_dense(const std::vector<Rat>& v);
    std::vector<Rat> to_dense(std::size_t n) const;
    bool empty() const { return e.empty(); }
    std::uint32_t lead() const { return e.front().first; }
    const Rat& lead_val() const { return e.front().second; }
    void push(std::uint32_t col, Rat v) { e.emplace_back(col, std::move(v)); }

    // scale so entries are coprime integers with positive leading coefficient
    void normalize();
};

// r -= c * p (sorted merge)
void axpy(SparseVec& r, const Rat& c, const SparseVec& p);

// Echelon basis of a row span. With track_coords, every stored row remembers
// its expression in the inserted generators, so coords_in can solve
// "v = sum c_k gen_k" exactly.
class SparseSpan {
public:
    explicit SparseSpan(std::size_t ncols, bool track_coords = false)
        : ncols_(ncols), track_(track_coords) {}

    bool insert(SparseVec row);  // true if the span grew
    bool insert(const std::vector<Rat>& row) { return insert(SparseVec::from_dense(row)); }

    bool in_span(SparseVec row) const;
    bool in_span(const std::vector<Rat>& row) const { return in_span(SparseVec::from_dense(row)); }

    // coefficients over the *inserted* generators; nullopt if not in span or
    // if coordinate tracking is off
    std::optional<std::vector<Rat>> coords_in(SparseVec row) const;
    std::optional<std::vector<Rat>> coords_in(const std::vector<Rat>& row) const {
        return coords_in(SparseVec::from_dense(row));
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t gens() const { return n_gens_; }
    std::size_t ncols() const { return ncols_; }

private:
    struct Row {
        SparseVec v;
        std::vector<std::pair<std::uint32_t, Rat>> comb;  // over generator index
    };
    // returns residual; accumulates combination if comb != nullptr
    SparseVec reduce(SparseVec row, std::vector<std::pair<std::uint32_t, Rat>>* comb) const;

    std::size_t ncols_;
    bool track_;
    std::size_t n_gens_ = 0;
    std::vector<Row> rows_;
    std::vector<std::int64_t> lead_to_row_ = std::vector<std::int64_t>();  // lazily sized
};

// nullspace of a (possibly huge) sparse system; ncols must be modest
// (final densification is ncols x ncols at worst)
std::vector<std::vector<Rat>> sparse_nullspace(const std::vector<SparseVec>& rows, std::size_t ncols);

std::size_t sparse_rank(const std::vector<SparseVec>& rows, std::size_t ncols);

// ------------------------------------------------------------ modular rank

struct ModularRank {
    std::size_t value = 0;
    bool exact_fallback = false;               // primes disagreed or were unusable
    std::vector<std::size_t> per_prime;        // rank per usable prime
};

inline const std::vector<std::uint32_t> kDefaultPrimes = {2147483647u, 2147483629u, 2147483587u};

// rank of m with entries reduced mod p (entries n/d need p not dividing d;
// violating rows route through denominator clearing, and an unusable prime is
// skipped). Disagreement between primes falls back to the exact rank.
ModularRank modular_rank(const MatQ& m, const std::vector<std::uint32_t>& primes = kDefaultPrimes);

// the same pre-check for large sparse systems
ModularRank sparse_modular_rank(const std::vector<SparseVec>& rows, std::size_t ncols,
                                const std::vector<std::uint32_t>& primes = kDefaultPrimes);

// ----------------------------------------------------------- symmetric form

struct Signature {
    std::size_t neg = 0, zero = 0, pos = 0;
};

// exact signature of a symmetric rational matrix (congruence diagonalization)
Signature sym_signature(MatQ m);

// ------------------------------------------------------------ span helpers

bool span_equal(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b);
bool in_span(const std::vector<Rat>& v, const std::vector<std::vector<Rat>>& basis);
std::size_t rank_of_rows(const std::vector<std::vector<Rat>>& rows);

std::vector<Rat> mat_to_vec(const MatQ& m);
MatQ vec_to_mat(const std::vector<Rat>& v, std::size_t n);

}  // namespace exc
