#include "roq/specseq/page.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <fmt/format.h>

#include "roq/exact/hom.hpp"
#include "roq/util/errors.hpp"
#include "roq/util/parallel.hpp"

namespace roq {

PageWindow PageWindow::around(const Window& w, int padding, int reach) {
    if (w.empty()) throw WindowError("PageWindow: empty window");
    if (padding < 0 || reach < 0) throw WindowError("PageWindow: negative padding or reach");
    PageWindow p;
    p.chart = w.padded(padding);
    p.read = w;
    p.s_read_min = w.x_min + w.y_min - padding;
    p.s_min = p.s_read_min - reach;
    p.s_max = std::max(0, w.x_max + w.y_max + padding);
    return p;
}

bool PageWindow::in_range(const TriDegree& t) const {
    return t.s >= s_min && t.s <= s_max && chart.contains(t.shadow());
}

std::string DifferentialCandidate::to_string() const {
    return fmt::format("d{} {} -> {} ({} -> {})", r, source.to_string(), target.to_string(), from.to_string(),
                       to.to_string());
}

Page Page::from_presentation(const Alphabet& alpha, const PageWindow& window) {
    auto basis = std::make_shared<E1Basis>();
    basis->alphabet = alpha;
    basis->window = window;

    const Window& c = window.chart;
    const int smag = std::max(std::abs(window.s_min), std::abs(window.s_max));
    const int bound = std::max(std::abs(c.x_min), std::abs(c.x_max)) + std::max(std::abs(c.y_min), std::abs(c.y_max)) +
                      smag + 2;
    std::vector<std::pair<int, int>> ranges;
    for (const auto& g : alpha.generators()) {
        int b = g.degree.s != 0 ? smag / std::abs(g.degree.s) : bound;
        ranges.emplace_back(g.invertible ? -b : 0, b);
    }

    Exponents e = alpha.unit();
    auto visit = [&](auto&& self, std::size_t i, TriDegree d) -> void {
        if (i == alpha.size()) {
            if (!window.in_range(d)) return;
            auto& list = basis->monomials[d];
            basis->index.emplace(e, std::pair{d, list.size()});
            list.push_back(e);
            return;
        }
        for (int k = ranges[i].first; k <= ranges[i].second; ++k) {
            e[i] = k;
            self(self, i + 1, d + alpha[i].degree * k);
        }
        e[i] = 0;
    };
    visit(visit, 0, TriDegree{});

    std::map<TriDegree, Subquotient> groups;
    for (const auto& [t, mons] : basis->monomials)
        groups.emplace(t, Subquotient(Lattice::full(mons.size()), Lattice::zero(mons.size())));
    return Page(std::move(basis), 1, std::move(groups));
}

std::vector<TriDegree> Page::support() const {
    std::vector<TriDegree> out;
    for (const auto& [t, sq] : groups_)
        if (!sq.group().is_zero()) out.push_back(t);
    return out;
}

FgAbelian Page::group_at(const TriDegree& t) const {
    auto it = groups_.find(t);
    return it == groups_.end() ? FgAbelian() : it->second.group();
}

const Subquotient* Page::subquotient_at(const TriDegree& t) const {
    auto it = groups_.find(t);
    return it == groups_.end() ? nullptr : &it->second;
}

const std::vector<Exponents>& Page::e1_basis(const TriDegree& t) const {
    static const std::vector<Exponents> empty;
    auto it = basis_->monomials.find(t);
    return it == basis_->monomials.end() ? empty : it->second;
}

void Page::validate(const DifferentialSpec& d) const {
    const Alphabet& alpha = alphabet();
    if (d.r != r_) throw DifferentialError(fmt::format("d{} given on page E{}", d.r, r_));
    for (std::size_t i = 0; i < d.gens.size(); ++i) {
        if (d.gens[i].base >= alpha.size() || d.gens[i].power == 0)
            throw DifferentialError("bad page generator " + d.gens[i].name);
        for (std::size_t j = 0; j < i; ++j)
            if (d.gens[j].base == d.gens[i].base)
                throw DifferentialError("page generators " + d.gens[j].name + " and " + d.gens[i].name +
                                        " share a base generator");
    }
    for (const auto& [name, img] : d.images) {
        auto it = std::find_if(d.gens.begin(), d.gens.end(), [&](const PageGenerator& g) { return g.name == name; });
        if (it == d.gens.end()) throw DifferentialError("differential on undeclared page generator " + name);
        if (img.is_zero()) continue;
        TriDegree want = alpha[it->base].degree * it->power + TriDegree::differential(d.r);
        TriDegree got = img.degree(alpha);
        if (got != want)
            throw DegreeMismatchError(fmt::format("d{}({}) = {} has tridegree {}, expected {}", d.r, name,
                                                  img.format(alpha), got.to_string(), want.to_string()));
    }
}

Polynomial Page::differential_of(const DifferentialSpec& d, const Exponents& m) const {
    const Alphabet& alpha = alphabet();
    std::vector<int> f(d.gens.size(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (m[i] == 0) continue;
        bool found = false;
        for (std::size_t k = 0; k < d.gens.size(); ++k) {
            if (d.gens[k].base != i) continue;
            if (m[i] % d.gens[k].power != 0) break;
            f[k] = m[i] / d.gens[k].power;
            found = true;
        }
        if (!found)
            throw DifferentialError("monomial " + alpha.format(m) + " is not a product of page generators");
    }

    Polynomial out;
    int sign_parity = 0;
    for (std::size_t k = 0; k < d.gens.size(); ++k) {
        const PageGenerator& g = d.gens[k];
        const int p = std::abs((alpha[g.base].degree * g.power).total()) % 2;
        auto it = d.images.find(g.name);
        if (f[k] != 0 && it != d.images.end() && !it->second.is_zero()) {
            // d(g^c) = c g^{c-1} dg for even g; for odd g only odd powers
            // have a nonzero derivative.
            Integer kappa = p == 0 ? Integer(f[k]) : Integer(std::abs(f[k]) % 2);
            if (sign_parity % 2 == 1) kappa = -kappa;
            Exponents rest = m;
            rest[g.base] -= g.power;
            out = out + Polynomial::monomial(rest, kappa) * it->second;
        }
        sign_parity += std::abs(f[k] * p);
    }
    return out;
}

std::vector<Integer> Page::apply(const DifferentialSpec& d, const TriDegree& t, const std::vector<Integer>& v) const {
    const auto& src = e1_basis(t);
    if (v.size() != src.size()) throw RoqError("Page::apply: vector length mismatch at " + t.to_string());
    TriDegree target = t + TriDegree::differential(d.r);
    if (!window().in_range(target)) return {};
    const auto& dst = e1_basis(target);
    std::vector<Integer> out(dst.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Polynomial img = differential_of(d, src[i]);
        for (const auto& [e, c] : img.terms()) {
            auto it = basis_->index.find(e);
            if (it == basis_->index.end() || it->second.first != target)
                throw RoqError("Page::apply: " + alphabet().format(e) + " missing from the E1 basis at " +
                               target.to_string());
            out[it->second.second] += c * v[i];
        }
    }
    return out;
}

namespace {

struct TurnResult {
    std::optional<Lattice> cycles;         // Z_{r+1} at the source
    std::optional<Lattice> image;          // span of d(Z_r) at the target
    std::optional<std::string> failure;
};

}  // namespace

Page Page::turn(const DifferentialSpec& d, unsigned threads) const {
    validate(d);
    const TriDegree step = TriDegree::differential(d.r);
    std::vector<const std::pair<const TriDegree, Subquotient>*> items;
    for (const auto& kv : groups_) items.push_back(&kv);
    std::vector<TurnResult> results(items.size());

    parallel_for(items.size(), threads, [&](std::size_t i) {
        const TriDegree& t = items[i]->first;
        const Subquotient& sq = items[i]->second;
        TurnResult& res = results[i];
        const TriDegree target = t + step;
        const Subquotient* tsq = subquotient_at(target);
        if (!window().in_range(target) || tsq == nullptr) {
            // Nothing to hit; the E1 group at the target is zero or unknown.
            if (window().in_range(target) && sq.cycles().dim() > 0) {
                for (std::size_t j = 0; j < sq.cycles().dim(); ++j) {
                    auto img = apply(d, t, sq.cycles().basis_vector(j));
                    if (std::any_of(img.begin(), img.end(), [](const Integer& c) { return c != 0; }))
                        res.failure = "differential leaves the E1 basis at " + t.to_string();
                }
            }
            res.cycles = sq.cycles();
            return;
        }
        const std::size_t k = sq.cycles().dim();
        std::vector<std::vector<Integer>> cols;
        for (std::size_t j = 0; j < k; ++j) {
            auto z = sq.cycles().basis_vector(j);
            auto dz = apply(d, t, z);
            if (!tsq->contains(dz)) {
                res.failure = fmt::format("d{} of {} at {} is not a cycle in {}", d.r, alphabet().format(e1_basis(t)[0]),
                                          t.to_string(), target.to_string());
                return;
            }
            const TriDegree t2 = target + step;
            if (const Subquotient* sq2 = subquotient_at(t2); sq2 && window().in_range(t2)) {
                auto ddz = apply(d, target, dz);
                if (!sq2->is_boundary(ddz)) {
                    res.failure = fmt::format("d{}∘d{} != 0 on {} at {}", d.r, d.r, alphabet().format(e1_basis(t)[0]),
                                              t.to_string());
                    return;
                }
            }
            cols.push_back(std::move(dz));
        }
        for (std::size_t j = 0; j < sq.boundaries().dim(); ++j) {
            if (!tsq->is_boundary(apply(d, t, sq.boundaries().basis_vector(j)))) {
                res.failure = fmt::format("d{} is not well defined on E{} at {}", d.r, d.r, t.to_string());
                return;
            }
        }
        const std::size_t nt = tsq->ambient();
        IntMatrix dmat = IntMatrix::from_columns(nt, cols);
        Lattice keep = Lattice::preimage(dmat, tsq->boundaries());
        res.cycles = keep.dim() == 0 ? Lattice::zero(sq.ambient()) : Lattice::span(sq.cycles().basis() * keep.basis());
        res.image = Lattice::span(dmat);
    });

    for (const auto& r : results)
        if (r.failure) throw DifferentialError(*r.failure);

    std::map<TriDegree, Lattice> images;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (results[i].image) images.emplace(items[i]->first + step, *results[i].image);

    std::vector<std::optional<Subquotient>> next(items.size());
    parallel_for(items.size(), threads, [&](std::size_t i) {
        const TriDegree& t = items[i]->first;
        Lattice b = items[i]->second.boundaries();
        if (auto it = images.find(t); it != images.end()) b = b + it->second;
        next[i].emplace(*results[i].cycles, b);
    });
    std::map<TriDegree, Subquotient> groups;
    for (std::size_t i = 0; i < items.size(); ++i) groups.emplace(items[i]->first, std::move(*next[i]));
    return Page(basis_, r_ + 1, std::move(groups));
}

std::vector<DifferentialCandidate> Page::candidates(int r) const {
    std::vector<DifferentialCandidate> out;
    const TriDegree step = TriDegree::differential(r);
    for (const auto& [t, sq] : groups_) {
        if (sq.group().is_zero()) continue;
        const TriDegree target = t + step;
        auto it = groups_.find(target);
        if (it == groups_.end() || it->second.group().is_zero()) continue;
        if (!window().reads(t) || !window().reads(target)) continue;
        if (hom_nonzero(sq.group(), it->second.group()))
            out.push_back({r, t, target, sq.group(), it->second.group()});
    }
    return out;
}

Page Page::turn_trivial() const {
    auto c = candidates(r_);
    if (!c.empty()) throw DifferentialError("possible nonzero differential " + c.front().to_string());
    return Page(basis_, r_ + 1, groups_);
}

Chart Page::to_chart(const Window& w, const std::vector<Multiplier>& mults, const std::string& theory,
                     const std::string& pipeline, std::vector<Degree>* multi) const {
    Chart chart(theory, pipeline, w);
    std::map<Degree, std::vector<TriDegree>> layers;
    for (const auto& [t, sq] : groups_) {
        if (sq.group().is_zero() || !window().in_range(t) || t.s < window().s_read_min || !w.contains(t.shadow())) continue;
        layers[t.shadow()].push_back(t);
    }
    for (const auto& [d, ts] : layers) {
        FgAbelian g;
        for (const auto& t : ts) g = g + group_at(t);
        chart.set_entry(d, ChartEntry::bare(g));
        if (ts.size() > 1 && multi) multi->push_back(d);
    }

    for (const auto& mult : mults) {
        const TriDegree shift = alphabet().degree(mult.monomial);
        if (shift.shadow() != map_degree(mult.map_name))
            throw DegreeMismatchError("multiplier " + mult.map_name + " = " + alphabet().format(mult.monomial) +
                                      " has the wrong chart degree");
        bool complete = true;
        for (const auto& [d, ts] : layers) {
            const Degree dt = d + shift.shadow();
            if (!w.contains(dt)) continue;
            auto lt = layers.find(dt);
            if (lt == layers.end()) continue;
            if (ts.size() > 1 || lt->second.size() > 1) {
                complete = false;
                continue;
            }
            const TriDegree src = ts.front();
            const TriDegree dst = src + shift;
            const Subquotient& ssq = groups_.at(src);
            if (dst != lt->second.front()) {
                // The product lands in a filtration with zero E-infinity.
                chart.set_map(mult.map_name, d, IntMatrix::zero(chart.group_at(dt).num_generators(), ssq.group().num_generators()));
                continue;
            }
            const Subquotient& tsq = groups_.at(dst);
            const auto& sb = e1_basis(src);
            IntMatrix m = IntMatrix::zero(tsq.ambient(), sb.size());
            for (std::size_t j = 0; j < sb.size(); ++j) {
                auto it = basis_->index.find(multiply(sb[j], mult.monomial));
                if (it == basis_->index.end() || it->second.first != dst)
                    throw RoqError("to_chart: product outside the E1 basis at " + dst.to_string());
                m(it->second.second, j) = 1;
            }
            chart.set_map(mult.map_name, d, ssq.induced_map(m, tsq));
        }
        if (complete) chart.mark_complete(mult.map_name);
    }
    return chart;
}

Chart collapse_to_chart(const Page& page, const Window& w, const std::vector<Multiplier>& mults,
                        const std::string& theory, const std::string& pipeline, std::vector<Degree>* multi) {
    for (int r = page.number(); r <= page.max_reach(); ++r) {
        auto c = page.candidates(r);
        if (!c.empty()) throw DifferentialError("spectral sequence has not collapsed: " + c.front().to_string());
    }
    return page.to_chart(w, mults, theory, pipeline, multi);
}

}  // namespace roq
