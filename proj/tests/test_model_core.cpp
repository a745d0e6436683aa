#include <doctest.h>

#include "support.hpp"
#include "walks/corpus.hpp"
#include "walks/errors.hpp"
#include "walks/model.hpp"

using namespace walks;

namespace {

WalkModel cardinal() { return find_corpus_entry("cardinal-2d")->model; }
WalkModel zerodrift2d() { return find_corpus_entry("zerodrift-2d-weighted")->model; }

// lifts A/Q/B back into d variables and checks S = A/z_d + Q + z_d B
void check_reassembly(const WalkModel& canonical) {
    const int d = canonical.dimension();
    AxisDecomposition dec = decompose(canonical);
    LaurentPoly::Exponents down(d, 0), up(d, 0);
    down[d - 1] = -1;
    up[d - 1] = 1;
    LaurentPoly rebuilt = dec.A.with_variable_inserted(d - 1).shifted(down) +
                          dec.Q.with_variable_inserted(d - 1) +
                          dec.B.with_variable_inserted(d - 1).shifted(up);
    CHECK(rebuilt == char_poly(canonical));
}

} // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational(" 7/2 ") == Rational(7, 2));
    CHECK_THROWS_AS((void)parse_rational("1/0"), WalkError);
    CHECK_THROWS_AS((void)parse_rational("a"), WalkError);
    CHECK(rational_str(Rational(-5, 3)) == "-5/3");
}

TEST_CASE("gaussian rationals: exact powers and inverses") {
    GaussianRational i = GaussianRational::i();
    CHECK(i.pow(2) == GaussianRational(Rational(-1)));
    CHECK(i.pow(-1) == GaussianRational(Rational(0), Rational(-1)));
    GaussianRational z(Rational(3), Rational(4));
    CHECK(z.norm2() == Rational(25));
    CHECK(z * z.inverse() == GaussianRational::one());
}

TEST_CASE("parse_and_validate accepts the cardinal model") {
    ModelSpec spec;
    spec.dimension = 2;
    spec.steps = {{{0, 1}, "1"}, {{0, -1}, "1"}, {{1, 0}, "1"}, {{-1, 0}, "1"}};
    WalkModel m = parse_and_validate(spec);
    CHECK(m.step_count() == 4);
    CHECK(m.total_weight() == Rational(4));
}

TEST_CASE("parse_and_validate rejects a model missing a backward step") {
    ModelSpec spec;
    spec.dimension = 2;
    spec.steps = {{{0, 1}, "1"}, {{0, -1}, "1"}, {{1, 0}, "1"}};
    try {
        parse_and_validate(spec);
        FAIL("expected MissingForwardOrBackwardStep");
    } catch (const WalkError& e) {
        CHECK(e.code() == ErrorCode::MissingForwardOrBackwardStep);
        CHECK(e.axis() == 1);
    }
}

TEST_CASE("parse_and_validate merges duplicate steps by weight") {
    ModelSpec spec;
    spec.dimension = 2;
    spec.steps = {{{0, 1}, "1"}, {{0, 1}, "1"}, {{1, -1}, "1"}, {{-1, -1}, "1"}};
    WalkModel m = parse_and_validate(spec);
    CHECK(m.step_count() == 3);
    CHECK(m.steps().at({0, 1}) == Rational(2));
    CHECK(m == zerodrift2d());
}

TEST_CASE("parse_and_validate error paths") {
    ModelSpec zero;
    zero.dimension = 2;
    zero.steps = {{{0, 0}, "1"}, {{0, 1}, "1"}, {{0, -1}, "1"}, {{1, 0}, "1"}, {{-1, 0}, "1"}};
    CHECK_THROWS_WITH_AS((void)parse_and_validate(zero), doctest::Contains("zero step"),
                         WalkError);

    ModelSpec neg;
    neg.dimension = 2;
    neg.steps = {{{0, 1}, "0"}, {{0, -1}, "1"}, {{1, 0}, "1"}, {{-1, 0}, "1"}};
    try {
        parse_and_validate(neg);
        FAIL("expected NonPositiveWeight");
    } catch (const WalkError& e) {
        CHECK(e.code() == ErrorCode::NonPositiveWeight);
    }

    ModelSpec far;
    far.dimension = 2;
    far.steps = {{{0, 2}, "1"}, {{0, -1}, "1"}, {{1, 0}, "1"}, {{-1, 0}, "1"}};
    try {
        parse_and_validate(far);
        FAIL("expected EntryOutOfRange");
    } catch (const WalkError& e) {
        CHECK(e.code() == ErrorCode::EntryOutOfRange);
    }
}

TEST_CASE("model JSON round trip") {
    WalkModel m = zerodrift2d();
    WalkModel back = parse_model_json(model_to_json(m));
    CHECK(back == m);
    CHECK_THROWS_AS((void)parse_model_json("{\"dimension\": 2}"), WalkError);
}

TEST_CASE("char_poly of the cardinal model") {
    LaurentPoly s = char_poly(cardinal());
    CHECK(s.term_count() == 4);
    CHECK(s.at_ones() == Rational(4));
    CHECK(s.str() == "1/x + 1/y + y + x"); // lexicographic exponent order
    CHECK(s.coefficient({1, 0}) == Rational(1));
    CHECK(s.coefficient({-1, 0}) == Rational(1));
}

TEST_CASE("char_poly of the weighted zero-drift model") {
    LaurentPoly s = char_poly(zerodrift2d());
    CHECK(s.coefficient({0, 1}) == Rational(2));
    CHECK(s.coefficient({-1, -1}) == Rational(1));
    CHECK(s.coefficient({1, -1}) == Rational(1));
    CHECK(s.at_ones() == Rational(4));
}

TEST_CASE("char_poly keeps single weighted terms") {
    WalkModel m(2, {{{1, 0}, Rational(3)}, {{-1, 0}, Rational(1)},
                    {{0, 1}, Rational(1)}, {{0, -1}, Rational(1)}});
    CHECK(char_poly(m).coefficient({1, 0}) == Rational(3));
}

TEST_CASE("classify: cardinal model is highly symmetric") {
    Classification c = classify(cardinal());
    CHECK(c.tag == SymmetryClass::HighlySymmetric);
    CHECK(c.drift == Rational(0));
    CHECK(c.permutation == std::vector<int>{0, 1});
}

TEST_CASE("classify: NW/NE/S model is mostly symmetric with drift +1") {
    WalkModel m(2, {{{-1, 1}, Rational(1)}, {{1, 1}, Rational(1)}, {{0, -1}, Rational(1)}});
    Classification c = classify(m);
    CHECK(c.tag == SymmetryClass::MostlySymmetric);
    CHECK(c.asymmetric_axis == 1);
    CHECK(c.drift == Rational(1));
    CHECK(c.drift_sign == DriftSign::Positive);
}

TEST_CASE("classify: doubly asymmetric model is unsupported") {
    WalkModel m(2, {{{1, 0}, Rational(1)},
                    {{-1, 0}, Rational(1)},
                    {{0, 1}, Rational(1)},
                    {{0, -1}, Rational(1)},
                    {{1, 1}, Rational(1)}});
    Classification c = classify(m);
    CHECK(c.tag == SymmetryClass::Unsupported);
    CHECK(!c.unsupported_reason.empty());
    CHECK_THROWS_AS((void)classify_and_decompose(m), WalkError);
}

TEST_CASE("classify: asymmetric axis permuted to the last position") {
    // same model with the asymmetric axis first
    WalkModel m(2, {{{1, -1}, Rational(1)}, {{1, 1}, Rational(1)}, {{-1, 0}, Rational(1)}});
    Classification c = classify(m);
    CHECK(c.tag == SymmetryClass::MostlySymmetric);
    CHECK(c.asymmetric_axis == 0);
    CHECK(c.permutation == std::vector<int>{1, 0});
    Classification cc = classify(*c.canonical);
    CHECK(cc.asymmetric_axis == 1);
    CHECK(cc.drift == c.drift);
}

TEST_CASE("decompose: weighted zero-drift model") {
    auto cm = classify_and_decompose(zerodrift2d());
    CHECK(cm.dec.A.str() == "1/x + x");
    CHECK(cm.dec.Q.is_zero());
    CHECK(cm.dec.B.str() == "2");
    CHECK(cm.dec.forward_weights == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(cm.cls.drift == Rational(0));
}

TEST_CASE("decompose: negative-drift model") {
    auto cm = classify_and_decompose(find_corpus_entry("negdrift-2d")->model);
    CHECK(cm.dec.A.str() == "1/x + x");
    CHECK(cm.dec.A.at_ones() == Rational(2));
    CHECK(cm.dec.B.str() == "1");
    CHECK(cm.dec.Q.is_zero());
    CHECK(cm.cls.drift == Rational(-1));
}

TEST_CASE("decompose: cardinal model has A = B and Q = x + 1/x") {
    auto cm = classify_and_decompose(cardinal());
    CHECK(cm.dec.A == cm.dec.B);
    CHECK(cm.dec.A.str() == "1");
    CHECK(cm.dec.Q.str() == "1/x + x");
    CHECK(cm.dec.forward_weights == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("decompose sectionals: [z_k] S in the remaining variables") {
    auto cm = classify_and_decompose(find_corpus_entry("negdrift-2d")->model);
    REQUIRE(cm.dec.sectionals.size() == 1);
    // [x] S = 1/y for steps SW,SE,N
    CHECK(cm.dec.sectionals[0].str(std::vector<std::string>{"y"}) == "1/y");
}

TEST_CASE("decompose round trip for the whole corpus") {
    for (const auto& e : corpus()) {
        Classification c = classify(e.model);
        REQUIRE(c.supported());
        check_reassembly(*c.canonical);
    }
}

TEST_CASE("highly symmetric models have A = B for every distinguished axis") {
    WalkModel m = cardinal();
    for (int axis = 0; axis < 2; ++axis) {
        std::vector<int> perm{0, 1};
        std::swap(perm[axis], perm[1]);
        AxisDecomposition dec = decompose(m.permuted(perm));
        CHECK(dec.A == dec.B);
    }
}

TEST_CASE("reflection over the asymmetric axis negates drift and swaps A and B") {
    WalkModel m = find_corpus_entry("negdrift-2d")->model;
    Classification before = classify(m);
    WalkModel r = m.reflected(1);
    Classification after = classify(r);
    CHECK(after.tag == SymmetryClass::MostlySymmetric);
    CHECK(after.drift == -before.drift);
    AxisDecomposition db = decompose(*before.canonical);
    AxisDecomposition da = decompose(*after.canonical);
    CHECK(da.A == db.B);
    CHECK(da.B == db.A);
    CHECK(da.Q == db.Q);
}

TEST_CASE("weight scaling multiplies section sums and forward weights") {
    WalkModel m = zerodrift2d();
    Rational lambda(3, 2);
    WalkModel s = m.scaled(lambda);
    Classification cm = classify(m), cs = classify(s);
    CHECK(cs.tag == cm.tag);
    CHECK(cs.drift == lambda * cm.drift);
    CHECK(s.total_weight() == lambda * m.total_weight());
    AxisDecomposition dm = decompose(*cm.canonical), ds = decompose(*cs.canonical);
    for (std::size_t k = 0; k < dm.forward_weights.size(); ++k)
        CHECK(ds.forward_weights[k] == lambda * dm.forward_weights[k]);
}

TEST_CASE("fingerprint distinguishes models and ignores step order") {
    WalkModel a(2, {{{0, 1}, Rational(1)}, {{0, -1}, Rational(1)},
                    {{1, 0}, Rational(1)}, {{-1, 0}, Rational(1)}});
    WalkModel b(2, {{{-1, 0}, Rational(1)}, {{1, 0}, Rational(1)},
                    {{0, -1}, Rational(1)}, {{0, 1}, Rational(1)}});
    CHECK(a.fingerprint() == b.fingerprint());
    CHECK(a.fingerprint() != zerodrift2d().fingerprint());
}
