#include <doctest.h>

#include "eghforge/egh.hpp"
#include "helpers.hpp"

using namespace eghforge;
using eghforge::testing::make_ideal;
using eghforge::testing::random_ideal;

namespace {

// caps within the generator-degree bounds, certificate-backed when findable
std::optional<std::vector<int>> certified_caps(const MonomialIdeal& I, uint64_t seed) {
    for (Trust trust : {Trust::monomial_certificate, Trust::linear_certificate}) {
        try {
            return choose_degree_sequence(I, std::nullopt, trust, seed, 150).ring.caps;
        } catch (const search_failure&) {
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("choose_degree_sequence with certificates") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    DegreeSequenceResult linear =
        choose_degree_sequence(triangle, std::nullopt, Trust::linear_certificate, 1);
    CHECK(linear.ring.caps == std::vector<int>{2, 2});
    REQUIRE(linear.certificate.has_value());
    CHECK(verify_regular_sequence(*linear.certificate).regular);
    for (const auto& f : *linear.certificate)
        CHECK(contained_in(f, triangle));

    MonomialIdeal ci = make_ideal(2, {"x1^2", "x2^3"});
    DegreeSequenceResult mono =
        choose_degree_sequence(ci, std::nullopt, Trust::monomial_certificate);
    CHECK(mono.ring.caps == std::vector<int>{2, 3});
    REQUIRE(mono.certificate.has_value());
}

TEST_CASE("choose_degree_sequence rejects caps outside the bounds") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    CHECK_THROWS_AS(
        choose_degree_sequence(triangle, std::vector<int>{2, 3}, Trust::assume),
        rejection_error);
    CHECK_THROWS_AS(choose_degree_sequence(triangle, std::vector<int>{2}, Trust::assume),
                    rejection_error);
    // search failure is a different outcome than rejection
    CHECK_THROWS_AS(
        choose_degree_sequence(triangle, std::vector<int>{2, 2}, Trust::monomial_certificate),
        search_failure);
}

TEST_CASE("choose_degree_sequence under assume") {
    MonomialIdeal I = make_ideal(4, {"x1*x2", "x2*x3^2", "x1*x4"});
    DegreeSequenceResult r = choose_degree_sequence(I, std::nullopt, Trust::assume);
    CHECK(static_cast<int>(r.ring.caps.size()) == height(I));
    for (int c : r.ring.caps)
        CHECK(c == generator_degree_range(I).first);
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("egh_witness: triangle example certifies") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    WitnessResult w = egh_witness(triangle, make_cap_vector(3, {2, 2}));
    CHECK(w.witness == make_ideal(3, {"x1^2", "x1*x2", "x2^2"}));
    CHECK(w.certified);
    QPolynomial q = q_polynomial(triangle);
    CHECK(q.q == IntPoly{{Int(1), Int(2)}});
    CHECK(q.dim == 1);
    CHECK(q_polynomial(w.witness) == q);
}

TEST_CASE("egh_witness: an lpp power ideal is its own witness") {
    MonomialIdeal I = make_ideal(2, {"x1^2", "x2^2"});
    WitnessResult w = egh_witness(I, make_cap_vector(2, {2, 2}));
    CHECK(w.witness == I);
    CHECK(w.certified);
}

TEST_CASE("egh_witness: disjoint quadratic pairs reduce to the power ideal") {
    MonomialIdeal I = make_ideal(4, {"x1*x2", "x3*x4"});
    WitnessResult w = egh_witness(I, make_cap_vector(4, {2, 2}));
    CHECK(w.witness == make_ideal(4, {"x1^2", "x2^2"}));
    CHECK(w.certified);
    // both series reduce to (1+t)^2 / (1-t)^2; the unreduced numerator is (1-t^2)^2
    CHECK(hilbert_series(w.witness).numerator ==
          IntPoly{{Int(1), Int(0), Int(-2), Int(0), Int(1)}});
    CHECK(reduce_series(hilbert_series(I)) == reduce_series(hilbert_series(w.witness)));
}

TEST_CASE("egh_witness propagates infeasibility with its degree") {
    // no type-(2,2) regular sequence exists in this height-2 ideal, and the
    // truncated ring cannot match its Hilbert function
    MonomialIdeal I = make_ideal(5, {"x1*x2", "x3*x4*x5"});
    CHECK_THROWS_AS(egh_witness(I, make_cap_vector(5, {2, 2})), infeasible_error);
}

TEST_CASE("verify_witness reports the three checks") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    CapVector ring = make_cap_vector(3, {2, 2});

    WitnessReport good = verify_witness(triangle, make_ideal(3, {"x1^2", "x1*x2", "x2^2"}), ring);
    CHECK(good.series_equal);
    CHECK(good.powers_contained);
    CHECK(good.lex_plus_powers);
    CHECK(good.all());

    WitnessReport self = verify_witness(triangle, triangle, ring);
    CHECK(self.series_equal);
    CHECK_FALSE(self.powers_contained);

    WitnessReport wrong = verify_witness(make_ideal(1, {"x1^2"}), make_ideal(1, {"x1^3"}),
                                         make_cap_vector(1, {2}));
    CHECK_FALSE(wrong.series_equal);
    CHECK_FALSE(wrong.powers_contained);
}

TEST_CASE("artinian reduction witnesses") {
    CHECK(artinian_reduction_witness(std::vector<Int>{1, 3, 3, 1}, make_cap_vector(3, {2, 2, 2})) ==
          make_ideal(3, {"x1^2", "x2^2", "x3^2"}));
    CHECK(artinian_reduction_witness(std::vector<Int>{1, 2, 1}, make_cap_vector(2, {2, 2})) ==
          make_ideal(2, {"x1^2", "x2^2"}));
    CHECK_THROWS_AS(
        artinian_reduction_witness(std::vector<Int>{1, 5}, make_cap_vector(2, {2, 2})),
        infeasible_error);
    CHECK_THROWS(artinian_reduction_witness(std::vector<Int>{1, 1}, make_cap_vector(2, {2})));
}

TEST_CASE("artinian witness hilbert function equals h padded with zeros") {
    std::vector<Int> h{1, 4, 6, 4, 1};
    MonomialIdeal L = artinian_reduction_witness(h, make_cap_vector(4, {2, 2, 2, 2}));
    CHECK(L == make_ideal(4, {"x1^2", "x2^2", "x3^2", "x4^2"}));
    std::vector<Int> back = hilbert_function_range(L, 8);
    for (size_t d = 0; d < back.size(); ++d)
        CHECK(back[d] == (d < h.size() ? h[d] : Int(0)));
}

TEST_CASE("recursive constructor matches worked pieces in one variable") {
    MonomialIdeal I = make_ideal(1, {"x1^2"});
    RecursiveResult r = egh_witness_recursive(I, make_cap_vector(1, {2}), 4);
    // degree-3 piece of the witness is {x1^3}
    CHECK(r.trace.degrees[3].piece_d == 1);
    // cap-respecting members: none once the cap bites
    CHECK(r.segment_sizes[3] == 0);
    CHECK(r.segment_sizes[1] == 0);
    CHECK(r.segment_sizes[0] == 0);
}

TEST_CASE("recursive constructor throws without a degree-a1 monomial") {
    MonomialIdeal I = make_ideal(2, {"x1^2*x2"});
    CHECK_THROWS_AS(egh_witness_recursive(I, make_cap_vector(2, {2, 2}), 3), hypothesis_error);
}

TEST_CASE("oracle agreement: recursive sizes equal the direct segment sizes") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    CapVector ring = make_cap_vector(3, {2, 2});
    WitnessResult direct = egh_witness(triangle, ring, 8);
    RecursiveResult rec = egh_witness_recursive(triangle, ring, 8);
    for (int d = 0; d <= 8; ++d)
        CHECK(rec.segment_sizes[static_cast<size_t>(d)] ==
              direct.per_degree[static_cast<size_t>(d)].segment);
}

TEST_CASE("oracle agreement on random certificate-backed ideals") {
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 12) {
        MonomialIdeal I = random_ideal(rng, 4, 5, 3);
        auto caps = certified_caps(I, done);
        if (!caps)
            continue;
        CapVector ring = make_cap_vector(I.n, *caps);
        WitnessResult direct = egh_witness(I, ring, 8);
        RecursiveResult rec = egh_witness_recursive(I, ring, 8);
        for (int d = 0; d <= 8; ++d)
            CHECK(rec.segment_sizes[static_cast<size_t>(d)] ==
                  direct.per_degree[static_cast<size_t>(d)].segment);
        ++done;
    }
}

TEST_CASE("trace invariants: level containment and counting identity") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    CapVector ring = make_cap_vector(3, {2, 2});
    RecursiveResult rec = egh_witness_recursive(triangle, ring, 6);
    for (const DegreeTrace& tr : rec.trace.degrees) {
        if (tr.factors.empty())
            continue;
        CHECK(static_cast<int>(tr.factors.size()) == ring.caps[0]);
        CHECK(tr.f1.degree() == ring.caps[0]);
        // monotone gluing along the levels
        for (size_t i = 0; i + 1 < tr.level_piece_lo.size(); ++i) {
            for (const Monomial& z : tr.level_piece_lo[i]) {
                bool found = false;
                for (const Monomial& w : tr.level_piece_hi[i + 1])
                    found = found || w == z;
                CHECK(found);
            }
        }
        // the assembled piece size matches the input ideal
        CHECK(tr.piece_d == graded_piece_dim(triangle, tr.d));
        CHECK(tr.piece_d1 == graded_piece_dim(triangle, tr.d + 1));
    }
}

TEST_CASE("a too-small horizon recovers through doubling") {
    MonomialIdeal triangle = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    // at horizon 1 the witness is just the power ideal and the series differ;
    // the retry with a doubled horizon finds the full witness
    WitnessResult w = egh_witness(triangle, make_cap_vector(3, {2, 2}), 1);
    CHECK(w.certified);
    CHECK(w.horizon > 1);
    CHECK(w.witness == make_ideal(3, {"x1^2", "x1*x2", "x2^2"}));
}

TEST_CASE("certified witnesses agree with the input beyond the horizon") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        MonomialIdeal I = random_ideal(rng, 4, 5, 3);
        auto [lo, hi] = generator_degree_range(I);
        std::vector<int> caps(static_cast<size_t>(height(I)), lo);
        try {
            WitnessResult w = egh_witness(I, make_cap_vector(I.n, caps));
            if (!w.certified)
                continue;
            for (int k = 0; k < 5; ++k) {
                int d = w.horizon + 1 + static_cast<int>(rng() % 7);
                CHECK(hilbert_function(I, d) == hilbert_function(w.witness, d));
            }
        } catch (const infeasible_error&) {
            // a baseless constant-degree guess need not be feasible
        }
    }
}
