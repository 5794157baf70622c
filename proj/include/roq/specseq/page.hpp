#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "roq/exact/lattice.hpp"
#include "roq/grading/chart.hpp"
#include "roq/specseq/monomial.hpp"

namespace roq {

// The part of the trigraded plane a page is computed on. Tridegrees whose
// shadow lies in `chart` and with s_min <= s <= s_max are enumerated. Only
// shadows in `read` with s >= s_read_min are trusted when reading groups
// off; the margins absorb differentials leaving the read zone.
struct PageWindow {
    Window chart;
    Window read;
    int s_min = 0;
    int s_max = 0;
    int s_read_min = 0;

    // Chart window padded by `padding`; read zone down to
    // x_min + y_min - padding and `reach` further filtrations below it.
    static PageWindow around(const Window& w, int padding, int reach);
    bool in_range(const TriDegree& t) const;
    bool reads(const TriDegree& t) const { return in_range(t) && t.s >= s_read_min && read.contains(t.shadow()); }
};

struct DifferentialCandidate {
    int r = 0;
    TriDegree source;
    TriDegree target;
    FgAbelian from;
    FgAbelian to;
    std::string to_string() const;
};

// E^r as subquotients Z_r / B_r of the free abelian group on the E^1
// monomials of each tridegree.
class Page {
public:
    static Page from_presentation(const Alphabet& alpha, const PageWindow& window);

    int number() const { return r_; }
    const Alphabet& alphabet() const { return basis_->alphabet; }
    const PageWindow& window() const { return basis_->window; }

    // Tridegrees with a nonzero group, sorted.
    std::vector<TriDegree> support() const;
    FgAbelian group_at(const TriDegree& t) const;
    // Null when t carries no E^1 monomial.
    const Subquotient* subquotient_at(const TriDegree& t) const;
    const std::vector<Exponents>& e1_basis(const TriDegree& t) const;
    std::size_t e1_size() const { return basis_->index.size(); }

    // d of one E^1 monomial by the Leibniz rule over the page generators of
    // d, with Koszul signs on s + t. DifferentialError when the
    // monomial is not a product of page generators.
    Polynomial differential_of(const DifferentialSpec& d, const Exponents& m) const;
    // The same on a coordinate vector over e1_basis(t); empty when the
    // target lies outside the computed range.
    std::vector<Integer> apply(const DifferentialSpec& d, const TriDegree& t, const std::vector<Integer>& v) const;

    // E^{r+1} from d^r given on generators. Checks degrees, that d is well
    // defined on E^r and that d^2 = 0; DifferentialError names a witness.
    Page turn(const DifferentialSpec& d, unsigned threads = 1) const;
    // E^{r+1} = E^r; refuses if any d^r candidate exists.
    Page turn_trivial() const;

    // Pairs (T, T + |d^r|) with Hom(E_T, E_T') != 0, both of them read.
    // Uses the groups of this page, so r >= number() assumes the pages in
    // between are equal.
    std::vector<DifferentialCandidate> candidates(int r) const;
    // Largest r for which d^r can connect two computed tridegrees.
    int max_reach() const { return window().s_max - window().s_min; }

    // Sum over read filtrations of the groups at each degree of w, with
    // the structure maps given by the multipliers. Degrees where more than
    // one filtration contributes are appended to `multi` and get no maps.
    Chart to_chart(const Window& w, const std::vector<Multiplier>& mults, const std::string& theory,
                   const std::string& pipeline, std::vector<Degree>* multi = nullptr) const;

private:
    struct E1Basis {
        Alphabet alphabet;
        PageWindow window;
        std::map<TriDegree, std::vector<Exponents>> monomials;
        std::map<Exponents, std::pair<TriDegree, std::size_t>> index;
    };

    Page(std::shared_ptr<const E1Basis> basis, int r, std::map<TriDegree, Subquotient> groups)
        : basis_(std::move(basis)), r_(r), groups_(std::move(groups)) {}

    void validate(const DifferentialSpec& d) const;

    std::shared_ptr<const E1Basis> basis_;
    int r_ = 1;
    std::map<TriDegree, Subquotient> groups_;
};

// Checks that no d^r survives for r = page.number() .. max_reach() and
// reads off the abutment; DifferentialError names the first candidate.
Chart collapse_to_chart(const Page& page, const Window& w, const std::vector<Multiplier>& mults,
                        const std::string& theory, const std::string& pipeline,
                        std::vector<Degree>* multi = nullptr);

}  // namespace roq
