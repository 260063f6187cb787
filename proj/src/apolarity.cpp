#include "apolar/apolarity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "apolar/dense_elimination.hpp"
#include "apolar/errors.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/sparse_echelon.hpp"

namespace apolar {

std::string to_string(Arithmetic a) { return a == Arithmetic::Rational ? "rational" : "mod-p"; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ambient_dimension(int nvars, int k) {
    if (k < 0 || nvars < 0) return 0;
    if (nvars == 0) return k == 0 ? 1 : 0;
    return binomial(static_cast<std::uint64_t>(nvars + k - 1), static_cast<std::uint64_t>(k));
}

std::vector<Monomial> monomials_of_degree(int nvars, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    out.reserve(ambient_dimension(nvars, k));
    std::vector<VarPower> stack;
    // Exponent of the lowest variable from high to low yields descending order.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (left == 0) {
            out.push_back(Monomial::from_powers(stack));
            return;
        }
        if (var == nvars) return;
        const int lo = var == nvars - 1 ? left : 0;
        for (int e = left; e >= lo; --e) {
            if (e > 0) stack.push_back({static_cast<VarIndex>(var), static_cast<std::uint16_t>(e)});
            self(self, var + 1, left - e);
            if (e > 0) stack.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

// ---------------------------------------------------------------------------
// GradedSubspace

namespace {

void require_degree(const Polynomial& p, int degree) {
    if (p.is_zero()) return;
    const auto d = p.homogeneous_degree();
    if (!d || *d != degree) {
        throw UsageError("expected a homogeneous polynomial of degree " + std::to_string(degree));
    }
}

struct MonomialIndex {
    std::vector<Monomial> monos;  // descending
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;

    explicit MonomialIndex(std::vector<Monomial> sorted) : monos(std::move(sorted)) {
        index.reserve(monos.size() * 2);
        for (std::uint32_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    }

    std::uint32_t at(const Monomial& m) const { return index.at(m); }
};

MonomialIndex index_for(std::vector<Monomial> monos) {
    std::sort(monos.begin(), monos.end(), DiagonalLexGreater{});
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    return MonomialIndex(std::move(monos));
}

template <class S>
SparseRow<S> to_row(const Polynomial& p, const MonomialIndex& idx) {
    SparseRow<S> row;
    row.reserve(p.size());
    for (const auto& t : p.terms()) row.emplace_back(idx.at(t.mono), Field<S>::from(t.coeff));
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

Polynomial from_row(const SparseRow<Rational>& row, const MonomialIndex& idx, Ring ring, const VariableGrid& grid) {
    std::vector<Term> terms;
    terms.reserve(row.size());
    for (const auto& [c, v] : row) terms.push_back(Term{idx.monos[c], v});
    return Polynomial::from_terms(ring, grid, std::move(terms));
}

} // namespace

GradedSubspace GradedSubspace::span_of(std::span<const Polynomial> polys, Ring ring, const VariableGrid& grid,
                                      int degree, std::size_t max_pivots) {
    std::vector<Monomial> monos;
    for (const auto& p : polys) {
        if (p.ring() != ring || !(p.grid() == grid)) throw UsageError("span_of: ring or grid mismatch");
        require_degree(p, degree);
        for (const auto& t : p.terms()) monos.push_back(t.mono);
    }
    const MonomialIndex idx = index_for(std::move(monos));
    SparseEchelon<Rational> ech(max_pivots);
    for (const auto& p : polys) ech.insert(to_row<Rational>(p, idx));
    std::vector<Polynomial> basis;
    for (const auto& row : ech.reduced_rows()) basis.push_back(from_row(row, idx, ring, grid));
    return from_reduced_basis(ring, grid, degree, std::move(basis));
}

GradedSubspace GradedSubspace::from_reduced_basis(Ring ring, const VariableGrid& grid, int degree,
                                                  std::vector<Polynomial> basis) {
    GradedSubspace s(ring, grid, degree);
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return DiagonalLexGreater{}(a.leading_monomial(), b.leading_monomial());
    });
    s.basis_ = std::move(basis);
    return s;
}

bool GradedSubspace::contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    if (p.ring() != ring_ || !(p.grid() == grid_)) return false;
    const auto d = p.homogeneous_degree();
    if (!d || *d != degree_) return false;
    Polynomial r = p;
    // Each pivot monomial occurs only in its own basis element, so one pass
    // in pivot order clears all of them.
    for (const auto& b : basis_) {
        const Rational c = r.coefficient(b.leading_monomial());
        if (!c.is_zero()) r = r - b.scaled(c);
    }
    return r.is_zero();
}

// ---------------------------------------------------------------------------
// Catalecticant images

namespace {

struct ImageEntry {
    std::uint32_t member;
    Monomial quotient;
    Rational coeff;
};

// For every degree-k monomial m with m o f_i != 0 for some member, the list of
// (member, quotient, coefficient) triples. Contraction of a monomial by a
// monomial never merges terms, so no image entry cancels.
struct ImageTable {
    std::vector<Monomial> sources;  // descending
    std::vector<std::vector<ImageEntry>> images;
};

void for_each_divisor(const Monomial& t, int k, const std::function<void(const Monomial&)>& fn) {
    const auto& powers = t.powers();
    std::vector<VarPower> chosen;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (left == 0) {
            fn(Monomial::from_powers(chosen));
            return;
        }
        if (i == powers.size()) return;
        int rest = 0;
        for (std::size_t j = i + 1; j < powers.size(); ++j) rest += powers[j].exp;
        const int hi = std::min<int>(powers[i].exp, left);
        const int lo = std::max(0, left - rest);
        for (int e = hi; e >= lo; --e) {
            if (e > 0) chosen.push_back({powers[i].var, static_cast<std::uint16_t>(e)});
            self(self, i + 1, left - e);
            if (e > 0) chosen.pop_back();
        }
    };
    rec(rec, 0, k);
}

void check_family(std::span<const Polynomial> family) {
    if (family.empty()) throw UsageError("empty family");
    for (const auto& f : family) {
        if (f.ring() != Ring::R) throw UsageError("forms must live in R");
        if (!(f.grid() == family.front().grid())) throw UsageError("grid mismatch within family");
        if (!f.is_zero() && !f.is_homogeneous()) throw UsageError("forms must be homogeneous");
    }
}

int family_degree(std::span<const Polynomial> family) {
    int d = -1;
    for (const auto& f : family) d = std::max(d, f.degree());
    return d;
}

ImageTable image_table(std::span<const Polynomial> family, int k) {
    std::unordered_map<Monomial, std::vector<ImageEntry>, MonomialHash> table;
    for (std::uint32_t i = 0; i < family.size(); ++i) {
        for (const auto& t : family[i].terms()) {
            if (static_cast<int>(t.mono.degree()) < k) continue;
            for_each_divisor(t.mono, k, [&](const Monomial& m) {
                table[m].push_back(ImageEntry{i, t.mono.quotient(m), t.coeff});
            });
        }
    }
    ImageTable out;
    out.sources.reserve(table.size());
    for (const auto& [m, _] : table) out.sources.push_back(m);
    std::sort(out.sources.begin(), out.sources.end(), DiagonalLexGreater{});
    out.images.reserve(out.sources.size());
    for (const auto& m : out.sources) out.images.push_back(std::move(table[m]));
    return out;
}

// Column coordinates on the target: (member, quotient) pairs, member-major,
// quotients descending.
template <class S>
std::vector<SparseRow<S>> image_rows(const ImageTable& tab, std::vector<std::pair<std::uint32_t, Monomial>>* columns) {
    std::vector<std::pair<std::uint32_t, Monomial>> keys;
    for (const auto& img : tab.images) {
        for (const auto& e : img) keys.emplace_back(e.member, e.quotient);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return DiagonalLexGreater{}(a.second, b.second);
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> col_of;
    for (std::uint32_t c = 0; c < keys.size(); ++c) {
        if (keys[c].first >= col_of.size()) col_of.resize(keys[c].first + 1);
        col_of[keys[c].first].emplace(keys[c].second, c);
    }
    std::vector<SparseRow<S>> rows;
    rows.reserve(tab.images.size());
    for (const auto& img : tab.images) {
        SparseRow<S> row;
        row.reserve(img.size());
        for (const auto& e : img) row.emplace_back(col_of[e.member].at(e.quotient), Field<S>::from(e.coeff));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    if (columns) *columns = std::move(keys);
    return rows;
}

template <class S>
std::uint64_t rank_of(const std::vector<SparseRow<S>>& rows, std::size_t max_pivots) {
    SparseEchelon<S> ech(max_pivots);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

template <class F>
auto with_arithmetic(const EngineConfig& cfg, F&& fn) {
    if (cfg.arithmetic == Arithmetic::ModPrime) {
        ModP::ScopedModulus guard(cfg.prime);
        return fn(ModP{});
    }
    return fn(Rational{});
}

void report(const EngineConfig& cfg, const std::string& msg) {
    if (cfg.progress) cfg.progress(msg);
}

void check_ambient(const EngineConfig& cfg, int nvars, int k) {
    const std::uint64_t dim = ambient_dimension(nvars, k);
    if (dim > cfg.max_ambient) {
        throw CeilingError("degree " + std::to_string(k) + " piece has " + std::to_string(dim) +
                           " monomials, above the ambient ceiling of " + std::to_string(cfg.max_ambient));
    }
}

// Reduced echelon basis of the common annihilator in degree k, as rows over
// the descending monomial basis `idx` of S_k.
template <class S>
std::vector<SparseRow<S>> annihilator_rows(std::span<const Polynomial> family, int k, const MonomialIndex& idx,
                                           const EngineConfig& cfg) {
    const ImageTable tab = image_table(family, k);
    const auto rows = image_rows<S>(tab, nullptr);
    std::vector<bool> has_image(idx.monos.size(), false);
    std::vector<std::uint32_t> source_col(tab.sources.size());
    for (std::size_t i = 0; i < tab.sources.size(); ++i) {
        source_col[i] = idx.at(tab.sources[i]);
        has_image[source_col[i]] = true;
    }
    std::vector<SparseRow<S>> kernel;
    for (std::uint32_t c = 0; c < idx.monos.size(); ++c) {
        if (!has_image[c]) kernel.push_back(SparseRow<S>{{c, Field<S>::one()}});
    }
    // Inserting sources from the smallest monomial up makes each relation's
    // leading monomial its own tag, and its other entries independent tags,
    // so the relations come out already reduced.
    TrackingEchelon<S> ech(cfg.max_pivots);
    for (std::size_t i = tab.sources.size(); i-- > 0;) {
        if (auto rel = ech.insert(rows[i], source_col[i])) kernel.push_back(std::move(*rel));
    }
    std::sort(kernel.begin(), kernel.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    return kernel;
}

} // namespace

GradedSubspace image_space(const Polynomial& f, int k, const EngineConfig& cfg) {
    const Polynomial fam[] = {f};
    check_family(fam);
    if (f.is_zero()) throw UsageError("image_space of the zero form");
    const int d = f.degree();
    if (k < 0 || k > d) throw UsageError("image_space: k out of range");
    const ImageTable tab = image_table(fam, k);
    std::vector<std::pair<std::uint32_t, Monomial>> cols;
    const auto rows = image_rows<Rational>(tab, &cols);
    SparseEchelon<Rational> ech(cfg.max_pivots);
    for (const auto& r : rows) ech.insert(r);
    std::vector<Polynomial> basis;
    for (const auto& row : ech.reduced_rows()) {
        std::vector<Term> terms;
        for (const auto& [c, v] : row) terms.push_back(Term{cols[c].second, v});
        basis.push_back(Polynomial::from_terms(Ring::R, f.grid(), std::move(terms)));
    }
    return GradedSubspace::from_reduced_basis(Ring::R, f.grid(), d - k, std::move(basis));
}

std::uint64_t image_rank(std::span<const Polynomial> family, int k, const EngineConfig& cfg) {
    check_family(family);
    if (k < 0) throw UsageError("negative degree");
    if (k > family_degree(family)) return 0;
    const ImageTable tab = image_table(family, k);
    return with_arithmetic(cfg, [&](auto tag) {
        using S = decltype(tag);
        return rank_of(image_rows<S>(tab, nullptr), cfg.max_pivots);
    });
}

std::uint64_t image_rank(const Polynomial& f, int k, const EngineConfig& cfg) {
    const Polynomial fam[] = {f};
    return image_rank(fam, k, cfg);
}

GradedSubspace graded_annihilator(std::span<const Polynomial> family, int k, const EngineConfig& cfg) {
    check_family(family);
    if (k < 0) throw UsageError("negative degree");
    const VariableGrid& grid = family.front().grid();
    check_ambient(cfg, grid.variable_count(), k);
    const MonomialIndex idx(monomials_of_degree(grid.variable_count(), k));
    const auto rows = annihilator_rows<Rational>(family, k, idx, cfg);
    std::vector<Polynomial> basis;
    basis.reserve(rows.size());
    for (const auto& row : rows) basis.push_back(from_row(row, idx, Ring::S, grid));
    return GradedSubspace::from_reduced_basis(Ring::S, grid, k, std::move(basis));
}

GradedSubspace graded_annihilator(const Polynomial& f, int k, const EngineConfig& cfg) {
    const Polynomial fam[] = {f};
    return graded_annihilator(fam, k, cfg);
}

std::uint64_t annihilator_dimension(std::span<const Polynomial> family, int k, const EngineConfig& cfg) {
    check_family(family);
    return ambient_dimension(family.front().grid().variable_count(), k) - image_rank(family, k, cfg);
}

// ---------------------------------------------------------------------------
// Hilbert functions and generator counts

std::uint64_t HilbertFunction::length() const { return std::accumulate(values.begin(), values.end(), std::uint64_t{0}); }

std::uint64_t HilbertFunction::max_value() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

bool HilbertFunction::is_symmetric() const { return std::equal(values.begin(), values.end(), values.rbegin()); }

HilbertFunction hilbert_function(const Polynomial& f, const EngineConfig& cfg) {
    if (f.is_zero()) throw UsageError("hilbert_function of the zero form");
    if (!f.is_homogeneous()) throw UsageError("hilbert_function needs a homogeneous form");
    HilbertFunction h;
    h.arithmetic = cfg.arithmetic;
    const int d = f.degree();
    for (int k = 0; k <= d; ++k) {
        h.values.push_back(image_rank(f, k, cfg));
        report(cfg, "hilbert: h_" + std::to_string(k) + " = " + std::to_string(h.values.back()));
    }
    return h;
}

int GeneratorReport::max_generating_degree() const {
    int best = 0;
    for (const auto& [k, m] : mu) {
        if (m > 0) best = std::max(best, k);
    }
    return best;
}

bool GeneratorReport::generated_only_in(int d) const {
    bool any = false;
    for (const auto& [k, m] : mu) {
        if (m == 0) continue;
        if (k != d) return false;
        any = true;
    }
    return any;
}

namespace {

template <class S>
GeneratorReport generator_degrees_impl(std::span<const Polynomial> family, int k_max, const EngineConfig& cfg) {
    GeneratorReport rep;
    rep.k_max = k_max;
    rep.arithmetic = cfg.arithmetic;
    const int nvars = family.front().grid().variable_count();
    const int deg = family_degree(family);
    std::optional<MonomialIndex> prev_idx;
    std::vector<SparseRow<S>> prev_ann;
    for (int k = 1; k <= k_max; ++k) {
        if (k > deg + 1) {
            rep.mu[k] = 0;
            continue;
        }
        check_ambient(cfg, nvars, k);
        MonomialIndex idx(monomials_of_degree(nvars, k));
        const std::uint64_t dim_ann = idx.monos.size() - image_rank(family, k, cfg);
        std::uint64_t generated = 0;
        if (k > 1 && dim_ann > 0) {
            SparseEchelon<S> ech(std::max<std::size_t>(cfg.max_pivots, dim_ann));
            auto product = [&](const SparseRow<S>& row, VarIndex v) {
                SparseRow<S> out;
                out.reserve(row.size());
                for (const auto& [c, val] : row) out.emplace_back(idx.at(prev_idx->monos[c].times_variable(v)), val);
                std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                return out;
            };
            // Monomial rows first: cheap, and usually the bulk of the span.
            for (int pass = 0; pass < 2 && ech.rank() < dim_ann; ++pass) {
                for (const auto& row : prev_ann) {
                    if ((row.size() == 1) != (pass == 0)) continue;
                    for (int v = 0; v < nvars && ech.rank() < dim_ann; ++v) {
                        ech.insert(product(row, static_cast<VarIndex>(v)));
                    }
                    if (ech.rank() >= dim_ann) break;
                }
            }
            generated = ech.rank();
        }
        rep.mu[k] = dim_ann - generated;
        report(cfg, "generators: mu_" + std::to_string(k) + " = " + std::to_string(rep.mu[k]));
        if (k < k_max && k <= deg) {
            prev_ann = annihilator_rows<S>(family, k, idx, cfg);
            prev_idx.emplace(std::move(idx));
        } else {
            prev_ann.clear();
            prev_idx.reset();
        }
    }
    return rep;
}

} // namespace

GeneratorReport minimal_generator_degrees(std::span<const Polynomial> family, int k_max, const EngineConfig& cfg) {
    check_family(family);
    if (k_max < 1) throw UsageError("k_max must be at least 1");
    return with_arithmetic(cfg, [&](auto tag) { return generator_degrees_impl<decltype(tag)>(family, k_max, cfg); });
}

GeneratorReport minimal_generator_degrees(const Polynomial& f, int k_max, const EngineConfig& cfg) {
    const Polynomial fam[] = {f};
    return minimal_generator_degrees(fam, k_max, cfg);
}

// ---------------------------------------------------------------------------
// Direct verification of degree-2 generation

bool DirectVerificationReport::passed() const {
    if (!candidates_annihilate) return false;
    if (monomials_fill_next_degree && !*monomials_fill_next_degree) return false;
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& d) { return d.equal(); });
}

namespace {

template <class S>
void compare_degrees(const Polynomial& f, std::span<const Polynomial> candidates, int k_max, const EngineConfig& cfg,
                     DirectVerificationReport& rep) {
    const int nvars = f.grid().variable_count();
    const int deg = f.degree();
    std::vector<const Polynomial*> ordered;
    for (const auto& g : candidates) {
        if (g.is_monomial()) ordered.push_back(&g);
    }
    for (const auto& g : candidates) {
        if (!g.is_monomial() && !g.is_zero()) ordered.push_back(&g);
    }
    for (int k = 1; k <= k_max; ++k) {
        DegreeComparison cmp;
        cmp.k = k;
        const std::uint64_t dim_sk = ambient_dimension(nvars, k);
        cmp.annihilator = dim_sk - (k <= deg ? image_rank(f, k, cfg) : 0);
        if (k >= 2 && cmp.annihilator > 0) {
            check_ambient(cfg, nvars, k);
            const MonomialIndex idx(monomials_of_degree(nvars, k));
            const auto multipliers = monomials_of_degree(nvars, k - 2);
            SparseEchelon<S> ech(std::max<std::size_t>(cfg.max_pivots, cmp.annihilator));
            for (const Polynomial* g : ordered) {
                std::vector<std::pair<std::uint32_t, S>> base;
                for (const auto& m : multipliers) {
                    SparseRow<S> row;
                    row.reserve(g->size());
                    for (const auto& t : g->terms()) row.emplace_back(idx.at(t.mono.times(m)), Field<S>::from(t.coeff));
                    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                    ech.insert(std::move(row));
                    if (ech.rank() >= cmp.annihilator) break;
                }
                if (ech.rank() >= cmp.annihilator) break;
            }
            cmp.generated = ech.rank();
        }
        report(cfg, "verify: degree " + std::to_string(k) + " generated " + std::to_string(cmp.generated) +
                        " of " + std::to_string(cmp.annihilator));
        rep.degrees.push_back(cmp);
    }
}

} // namespace

DirectVerificationReport verify_degree2_generation_direct(const Polynomial& f, std::span<const Polynomial> candidates,
                                                          int k_max, const EngineConfig& cfg) {
    const Polynomial fam[] = {f};
    check_family(fam);
    if (f.is_zero()) throw UsageError("verification needs a nonzero form");
    if (k_max < 1) throw UsageError("k_max must be at least 1");
    DirectVerificationReport rep;
    rep.arithmetic = cfg.arithmetic;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& g = candidates[i];
        if (g.ring() != Ring::S || !(g.grid() == f.grid())) throw UsageError("candidate ring or grid mismatch");
        require_degree(g, 2);
        if (!contract(g, f).is_zero()) rep.failing_candidates.push_back(i);
    }
    if (!rep.failing_candidates.empty()) {
        rep.candidates_annihilate = false;
        return rep;
    }
    with_arithmetic(cfg, [&](auto tag) {
        compare_degrees<decltype(tag)>(f, candidates, k_max, cfg, rep);
        return 0;
    });
    const int deg = f.degree();
    if (k_max >= deg + 1) {
        std::vector<Monomial> monos;
        for (const auto& g : candidates) {
            if (g.is_monomial()) monos.push_back(g.leading_monomial());
        }
        rep.monomials_fill_next_degree =
            MonomialIdeal(std::move(monos)).standard_monomial_count(f.grid().variable_count(), deg + 1) == 0;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Waring decompositions

namespace {

std::vector<Polynomial> powers_of(const Polynomial& f, std::span<const Polynomial> forms) {
    const int d = f.degree();
    std::vector<Polynomial> out;
    out.reserve(forms.size());
    for (const auto& l : forms) {
        require_compatible(f, l);
        const auto ld = l.homogeneous_degree();
        if (!ld || *ld != 1) throw UsageError("Waring forms must be nonzero linear forms");
        out.push_back(l.pow(static_cast<unsigned>(std::max(d, 0))));
    }
    return out;
}

} // namespace

bool waring_verify(const Polynomial& f, std::span<const Polynomial> forms, std::span<const Rational> coefficients) {
    if (forms.size() != coefficients.size()) throw UsageError("forms and coefficients differ in number");
    if (!f.is_zero() && !f.is_homogeneous()) throw UsageError("Waring verification needs a homogeneous form");
    const auto pw = powers_of(f, forms);
    Polynomial sum(f.ring(), f.grid());
    for (std::size_t i = 0; i < pw.size(); ++i) sum = sum + pw[i].scaled(coefficients[i]);
    return sum == f;
}

std::optional<std::vector<Rational>> waring_solve(const Polynomial& f, std::span<const Polynomial> forms) {
    if (!f.is_zero() && !f.is_homogeneous()) throw UsageError("Waring decomposition needs a homogeneous form");
    const auto pw = powers_of(f, forms);
    std::vector<Monomial> monos;
    for (const auto& t : f.terms()) monos.push_back(t.mono);
    for (const auto& p : pw) {
        for (const auto& t : p.terms()) monos.push_back(t.mono);
    }
    const MonomialIndex idx = index_for(std::move(monos));
    const auto rows = static_cast<dense::Index>(idx.monos.size());
    dense::Matrix<Rational> a(rows, static_cast<dense::Index>(pw.size()));
    dense::Vector<Rational> b(rows);
    for (dense::Index i = 0; i < rows; ++i) {
        b(i) = 0;
        for (dense::Index j = 0; j < a.cols(); ++j) a(i, j) = 0;
    }
    for (std::size_t j = 0; j < pw.size(); ++j) {
        for (const auto& t : pw[j].terms()) a(idx.at(t.mono), static_cast<dense::Index>(j)) = t.coeff;
    }
    for (const auto& t : f.terms()) b(idx.at(t.mono)) = t.coeff;
    const auto x = dense::solve<Rational>(a, b);
    if (!x) return std::nullopt;
    return std::vector<Rational>(x->data(), x->data() + x->size());
}

} // namespace apolar
