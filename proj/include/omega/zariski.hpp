#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/domains.hpp"
#include "omega/subset_mask.hpp"
#include "omega/term.hpp"

namespace omega {

using Point = std::vector<Element>;

inline constexpr std::size_t kDefaultMaxPoints = 1'000'000;

/// A subset of H^n, stored as a bitmask over the lexicographic point index.
class PointSet {
public:
    /// Empty set. Throws TooLarge when |H|^n exceeds max_points.
    PointSet(std::size_t algebra_size, std::size_t n_vars, std::size_t max_points = kDefaultMaxPoints);
    static PointSet all(std::size_t algebra_size, std::size_t n_vars, std::size_t max_points = kDefaultMaxPoints);

    std::size_t algebra_size() const noexcept { return algebra_size_; }
    std::size_t n_vars() const noexcept { return n_vars_; }
    /// |H|^n
    std::size_t space_size() const noexcept { return mask_.size(); }
    std::size_t size() const noexcept { return mask_.count(); }
    bool empty() const noexcept { return mask_.none(); }

    std::size_t index_of(const Point& p) const;
    Point point_at(std::size_t index) const;
    bool contains(const Point& p) const { return mask_.test(index_of(p)); }
    bool contains_index(std::size_t index) const { return mask_.test(index); }
    void insert(const Point& p) { mask_.set(index_of(p)); }
    void insert_index(std::size_t index) { mask_.set(index); }

    /// Points in lexicographic order.
    std::vector<Point> points() const;
    const SubsetMask& mask() const noexcept { return mask_; }

    bool is_subset_of(const PointSet& other) const { return mask_.is_subset_of(other.mask_); }
    friend PointSet operator|(PointSet a, const PointSet& b);
    friend PointSet operator&(PointSet a, const PointSet& b);
    friend bool operator==(const PointSet&, const PointSet&) = default;

    /// "0,0;1,0;2,0" (the CLI point syntax).
    std::string to_string() const;

private:
    std::size_t algebra_size_ = 0;
    std::size_t n_vars_ = 0;
    SubsetMask mask_;
};

/// Parses "0,0;1,0;2,0" into n-tuples. Throws ParseError.
PointSet parse_points(const std::string& text, std::size_t algebra_size, std::size_t n_vars,
                      std::size_t max_points = kDefaultMaxPoints);

/// Normalized terms, each asserted to vanish.
struct EquationSystem {
    std::size_t n_vars = 0;
    std::vector<Term> terms;
};

struct ZariskiOptions {
    std::size_t max_points = kDefaultMaxPoints;
    /// Build the subalgebra over A once and extend it lazily per candidate
    /// point; otherwise generate a fresh subalgebra of H^(|A|+1) per candidate.
    bool memoize = true;
    /// Try the ideal-image bounds before generating a subalgebra.
    bool ideal_bounds = true;
    /// Cap on the generated subalgebra size; TooLarge beyond it.
    std::size_t max_subalgebra = std::size_t{1} << 22;
};

/// T': every point at which all terms vanish.
PointSet solve_system(const FiniteOmegaGroup& algebra, const EquationSystem& system,
                      std::size_t max_points = kDefaultMaxPoints);

/// A'': points at which every term vanishing on A vanishes.
PointSet zariski_closure(const FiniteOmegaGroup& algebra, const PointSet& points, const ZariskiOptions& options = {});

bool is_algebraic(const FiniteOmegaGroup& algebra, const PointSet& points, const ZariskiOptions& options = {});

/// Decides whether V(x1) ∪ V(x2) ⊆ H^2 is algebraic. When it is not, the
/// witness (a,b) is the first point of the closure outside the union.
WitnessedVerdict equational_domain_check(const FiniteOmegaGroup& algebra, const ZariskiOptions& options = {});

struct AlgebraicLattice {
    std::size_t n_vars = 0;
    /// All algebraic subsets of H^n, in mask order.
    std::vector<PointSet> sets;
    bool meet_is_intersection = true;
    bool join_is_union = true;
    bool distributive = true;
    /// First pair whose union is not algebraic, when join_is_union is false.
    std::vector<std::size_t> union_witness;
};

/// Requires n_vars = 1 and |H| <= 8, or n_vars = 2 and |H| <= 3.
AlgebraicLattice enumerate_algebraic_sets(const FiniteOmegaGroup& algebra, std::size_t n_vars = 1,
                                          const ZariskiOptions& options = {});

/// Common zero set of all term functions of depth <= max_depth that vanish on
/// A. Depth 0 means 0 and the variables. A superset of zariski_closure(A).
/// Requires |H| <= 4, n <= 2, max_depth <= 4.
PointSet bounded_depth_ideal_oracle(const FiniteOmegaGroup& algebra, const PointSet& points, std::size_t max_depth);

}  // namespace omega
