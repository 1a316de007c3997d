#include "core/suites.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/smith.hpp"

namespace arrowsmith {

namespace {

// First failing identity for one arrow pair, or "" when everything holds.
std::string monoidal_pair_witness(Rng& rng, const ArrowObject& f, const ArrowObject& g) {
    const Field& fld = f.field();

    try {
        strong_monoidal_comparison(f, g);
    } catch (const ComparisonNotIsoError&) {
        return "strong monoidal comparison not an isomorphism";
    }

    for (const ArrowObject* a : {&f, &g}) {
        // triangle (eps cok) o (cok eta) = id on cok(a)
        ArrowMorphism t1 = compose(adjunction_counit(cok(*a)), cok_morphism(adjunction_unit(*a)));
        if (!(t1 == identity_morphism(cok(*a)))) return "triangle identity on cok";
        // triangle (ker eps) o (eta ker) = id on ker(a)
        ArrowMorphism t2 = compose(ker_morphism(adjunction_counit(*a)), adjunction_unit(ker(*a)));
        if (!(t2 == identity_morphism(ker(*a)))) return "triangle identity on ker";

        ArrowMorphism unit = adjunction_unit(*a);
        if (!unit.commutes()) return "adjunction unit square";
        if (unit.is_isomorphism() != is_mono(a->map)) return "unit iso <-> mono";
        ArrowMorphism counit = adjunction_counit(*a);
        if (!counit.commutes()) return "adjunction counit square";
        if (counit.is_isomorphism() != is_epi(a->map)) return "counit iso <-> epi";

        if (!(im(im(*a)) == im(*a))) return "im not idempotent";
        ImageLocalization loc = l_im(*a);
        if (!loc.unit.commutes()) return "localization unit square";

        // strict units of both monoidal structures
        if (!(pushout_product(*a, unit_box(fld)).arrow == *a)) return "right []-unit law";
        if (!(pushout_product(unit_box(fld), *a).arrow == *a)) return "left []-unit law";
        if (!(tensor_arrow(unit_tensor(fld), *a) == *a)) return "left (x)-unit law";
        if (!(tensor_arrow(*a, unit_tensor(fld)) == *a)) return "right (x)-unit law";
    }

    ArrowMorphism lax = lax_comparison(f, g);
    if (!lax.commutes()) return "lax comparison square";

    ArrowMorphism swap = box_swap(f, g);
    if (!swap.commutes() || !swap.is_isomorphism()) return "[]-symmetry";

    // adjoint transposes are mutually inverse
    ArrowMorphism phi = random_arrow_morphism(rng, cok(f), g);
    ArrowMorphism psi = adjoint_transpose_fwd(f, g, phi);
    if (!psi.commutes()) return "forward transpose square";
    if (!(adjoint_transpose_bwd(f, g, psi) == phi)) return "transpose roundtrip (fwd o bwd)";
    ArrowMorphism psi2 = random_arrow_morphism(rng, f, ker(g));
    ArrowMorphism phi2 = adjoint_transpose_bwd(f, g, psi2);
    if (!phi2.commutes()) return "backward transpose square";
    if (!(adjoint_transpose_fwd(f, g, phi2) == psi2)) return "transpose roundtrip (bwd o fwd)";

    // zero goes to zero under both transposes
    ArrowMorphism zero_phi{cok(f), g, Matrix(fld, g.dom_dim(), f.cod_dim()),
                           Matrix(fld, g.cod_dim(), cok(f).cod_dim())};
    if (!adjoint_transpose_fwd(f, g, zero_phi).comp0.is_zero() ||
        !adjoint_transpose_fwd(f, g, zero_phi).comp1.is_zero())
        return "transpose of zero";

    // corner injections of both association orders are jointly epi
    ArrowObject h{f.map};  // reuse f's map as the third factor
    for (bool left_first : {true, false}) {
        BoxProduct inner = left_first ? pushout_product(f, g) : pushout_product(g, h);
        BoxProduct outer = left_first ? pushout_product(inner.arrow, h)
                                      : pushout_product(f, inner.arrow);
        Matrix j1 = left_first
                        ? outer.from01 * kronecker(inner.from01, Matrix::identity(fld, h.cod_dim()))
                        : outer.from01;
        Matrix j2 = left_first
                        ? outer.from01 * kronecker(inner.from10, Matrix::identity(fld, h.cod_dim()))
                        : outer.from10 * kronecker(Matrix::identity(fld, f.cod_dim()), inner.from01);
        Matrix j3 = left_first
                        ? outer.from10
                        : outer.from10 * kronecker(Matrix::identity(fld, f.cod_dim()), inner.from10);
        if (rank(hcat(hcat(j1, j2), j3)) != outer.arrow.dom_dim())
            return left_first ? "cube injections (f[]g)[]h" : "cube injections f[](g[]h)";
    }
    return "";
}

ChainComplex direct_sum_complex(const ChainComplex& a, const ChainComplex& b) {
    if (!a.has_support()) return b;
    if (!b.has_support()) return a;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<std::size_t> dims;
    std::map<int, Matrix> diffs;
    for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n) + b.dim(n));
    for (int n = lo + 1; n <= hi; ++n) diffs.emplace(n, direct_sum(a.d(n), b.d(n)));
    return ChainComplex(a.field(), lo, std::move(dims), std::move(diffs));
}

ChainMap summand_inclusion(const ChainComplex& a, const ChainComplex& sum) {
    std::map<int, Matrix> comps;
    for (int n = a.lo(); a.has_support() && n <= a.hi(); ++n) {
        Matrix in(a.field(), sum.dim(n), a.dim(n));
        in.set_block(0, 0, Matrix::identity(a.field(), a.dim(n)));
        comps.emplace(n, std::move(in));
    }
    return ChainMap(a, sum, std::move(comps));
}

std::string stable_instance_witness(Rng& rng, Field field) {
    ChainMap f = random_chain_map(rng, field, -2, 2, 3);

    if (!stable_unit_check(f)) return "unit comparison X -> ker(cok(f)) not a weak equivalence";
    if (!stable_counit_check(f)) return "counit comparison cok(ker(f)) -> Y not a weak equivalence";
    if (!is_acyclic(cone(ChainMap::identity(f.src())).cone)) return "cone(id) not acyclic";
    if (!is_quasi_iso(ChainMap::identity(f.dst()))) return "identity not a quasi-iso";

    ChainComplex unit = ChainComplex::concentrated(field, 0, 1);
    if (!(tensor_complex(f.src(), unit) == f.src())) return "C (x) k[0] != C";
    if (!(tensor_complex(unit, f.dst()) == f.dst())) return "k[0] (x) C != C";

    ChainArrowMorphism idsq{f, f, ChainMap::identity(f.src()), ChainMap::identity(f.dst())};
    if (!componentwise_cof(idsq) || !componentwise_fib(idsq))
        return "identity square not componentwise cof+fib";
    if (!arrow_weq(idsq)) return "identity square not a weak equivalence";

    // degreewise-injective pair: summand inclusions
    ChainComplex w = random_complex(rng, field, -1, 1, 2);
    ChainComplex v = random_complex(rng, field, 0, 2, 2);
    ChainMap finj = summand_inclusion(f.src(), direct_sum_complex(f.src(), w));
    ChainMap ginj = summand_inclusion(f.dst(), direct_sum_complex(f.dst(), v));
    ChainBoxProduct box = pushout_product_chain(finj, ginj);
    ChainComplex x0y1 = tensor_complex(finj.src(), ginj.dst());
    ChainComplex x1y0 = tensor_complex(finj.dst(), ginj.src());
    ChainComplex x0y0 = tensor_complex(finj.src(), ginj.src());
    const ChainComplex& p = box.arrow.src();
    for (int n = p.has_support() ? p.lo() : 1; n <= (p.has_support() ? p.hi() : 0); ++n)
        if (p.dim(n) + x0y0.dim(n) != x0y1.dim(n) + x1y0.dim(n))
            return "pushout-product dimension formula at degree " + std::to_string(n);
    if (!box.arrow.chain_condition_holds()) return "pushout-product arrow not a chain map";
    if (!(compose(box.arrow, box.from01) == tensor_map(finj, ChainMap::identity(ginj.dst()))))
        return "box structure map from X0 (x) Y1";
    if (!(compose(box.arrow, box.from10) == tensor_map(ChainMap::identity(finj.dst()), ginj)))
        return "box structure map from X1 (x) Y0";
    return "";
}

// Instances are independent (instance i draws only from seed + i), so
// batches run concurrently; records are emitted in instance order.
template <typename Fn>
Report batched(const std::string& subject, const std::string& label, long count, Fn&& instance) {
    Report rep(subject);
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::vector<std::string> witnesses(static_cast<std::size_t>(std::max(count, 0L)));
    for (long base = 0; base < count; base += static_cast<long>(workers)) {
        std::vector<std::future<std::string>> batch;
        for (long i = base; i < std::min(count, base + static_cast<long>(workers)); ++i)
            batch.push_back(std::async(std::launch::async, instance, i));
        for (long i = base; i < std::min(count, base + static_cast<long>(workers)); ++i)
            witnesses[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i - base)].get();
    }
    for (long i = 0; i < count; ++i) {
        const std::string& w = witnesses[static_cast<std::size_t>(i)];
        rep.add(label + " " + std::to_string(i), w.empty(), w);
    }
    return rep;
}

}  // namespace

Report monoidal_suite(Field field, std::uint64_t seed, long count) {
    return batched("monoidal-check", "pair", count, [field, seed](long i) {
        Rng rng(seed + static_cast<std::uint64_t>(i));
        ArrowObject f = random_arrow(rng, field, 5);
        ArrowObject g = random_arrow(rng, field, 5);
        return monoidal_pair_witness(rng, f, g);
    });
}

Report monoidal_pair_check(const ArrowObject& f, const ArrowObject& g) {
    Report rep("monoidal-check (explicit pair)");
    Rng rng(0);
    std::string witness = monoidal_pair_witness(rng, f, g);
    rep.add("pair", witness.empty(), witness);
    return rep;
}

Report stable_suite(Field field, std::uint64_t seed, long count) {
    return batched("stable-check", "map", count, [field, seed](long i) {
        Rng rng(seed + static_cast<std::uint64_t>(i));
        return stable_instance_witness(rng, field);
    });
}

Report roundtrip_check(const Document& doc) {
    if (const auto* a = std::get_if<NonUnitalAlgebra>(&doc)) {
        Report rep("roundtrip");
        Report assoc = check_associativity(*a);
        rep.absorb("input.", assoc);
        if (!assoc.ok()) return rep;
        rep.absorb("", roundtrip_nu_report(*a));
        rep.absorb("", roundtrip_aug_report(unitalize(*a)));
        return rep;
    }
    if (const auto* b = std::get_if<AugmentedAlgebra>(&doc)) {
        Report rep("roundtrip");
        Report valid = validate(*b);
        rep.absorb("input.", valid);
        if (!valid.ok()) return rep;
        rep.absorb("", roundtrip_aug_report(*b));
        rep.absorb("", roundtrip_nu_report(augmentation_kernel(*b).first));
        return rep;
    }
    throw std::invalid_argument("roundtrip needs a non-unital or augmented algebra file");
}

Report smith_check(const Document& doc) {
    const auto* b = std::get_if<AugmentedAlgebra>(&doc);
    if (!b) throw std::invalid_argument("smith-check needs an augmented algebra file");
    Report rep("smith-check");
    Report valid = validate(*b);
    rep.absorb("input.", valid);
    if (!valid.ok()) return rep;
    SmithIdealVect s = smith_from_augmented(*b);
    rep.absorb("", verify_smith_ideal(s));
    rep.add("unit cokernel", is_unit_cokernel(s), "cok(j) is not an augmentation of the unit");
    if (!rep.ok()) return rep;
    rep.add("cok_smith recovers the algebra", cok_smith(s) == *b,
            "cok o smith_from_augmented is not the identity");
    rep.absorb("agreement.", smith_agreement_report(s));
    return rep;
}

Report dg_roundtrip_check(const Document& doc) {
    const auto* a = std::get_if<DGAlgebraNU>(&doc);
    if (!a) throw std::invalid_argument("dg-roundtrip needs a dg algebra file");
    return dg_roundtrip_report(*a);
}

Report main_theorem_check_doc(const Document& doc) {
    const auto* a = std::get_if<DGAlgebraNU>(&doc);
    if (!a) throw std::invalid_argument("main-theorem needs a dg algebra file");
    return main_theorem_check(*a);
}

}  // namespace arrowsmith
