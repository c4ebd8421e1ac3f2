#include "pms/word.hpp"

#include <doctest.h>

using namespace pms;

namespace {
AddressWord W(const std::string& s) { return AddressWord::parse(s); }
AddressWord Wb(const std::string& s) { return AddressWord::parse(s, Arity::Two); }
}  // namespace

TEST_CASE("word parsing round-trips") {
    auto w = W("llr.T");
    CHECK(w.arity == Arity::Two);
    CHECK(w.depth() == 3);
    CHECK(w.str() == "llr.T");

    auto v = W("abc.L");
    CHECK(v.arity == Arity::Three);
    CHECK(v.str() == "abc.L");

    CHECK(W(".B").arity == Arity::Two);
    CHECK(W(".T").arity == Arity::Three);  // bare base defaults to tri
    CHECK(Wb(".T").arity == Arity::Two);

    CHECK_THROWS_AS(W("la.T"), std::invalid_argument);   // mixed alphabets
    CHECK_THROWS_AS(W("ll.L"), std::invalid_argument);   // base not in alphabet
    CHECK_THROWS_AS(W("ll"), std::invalid_argument);
    CHECK_THROWS_AS(W("llx.T"), std::invalid_argument);
    CHECK_THROWS_AS(AddressWord::parse("ll.T", Arity::Three), std::invalid_argument);
}

TEST_CASE("base-case and single-letter distances") {
    CHECK(word_distance(W(".B"), W(".B")) == Dyadic{0});
    CHECK(word_distance(W(".B"), Wb(".T")) == Dyadic{1});
    CHECK(word_distance(W("l.B"), W("r.T")) == Dyadic{1});
    CHECK(word_distance(W("l.T"), W("r.B")) == Dyadic{0});   // the glued vertex
    CHECK(word_distance(W("l.B"), W("l.T")) == Dyadic(BigInt{1}, 1));
    CHECK(word_distance(W("a.L"), W("b.T")) == Dyadic{0});
    CHECK(word_distance(W("a.T"), W("b.L")) == Dyadic{1});
    CHECK(word_distance(W("c.L"), W("b.R")) == Dyadic{0});
    CHECK_THROWS_AS(word_distance(W("l.B"), W("a.T")), std::invalid_argument);
}

TEST_CASE("chain embedding is distance-preserving") {
    auto w = W("lr.B");
    auto e = embed(w, 5);
    CHECK(e.str() == "lrlll.B");
    CHECK(word_distance(w, e) == Dyadic{0});
    CHECK(embed(W("rr.T"), 4).str() == "rrrr.T");  // ⊤ extends by r
    CHECK(embed(W("a.T"), 3).str() == "aaa.T");
    CHECK(embed(W("a.L"), 3).str() == "abb.L");
    CHECK_THROWS_AS(embed(w, 1), std::invalid_argument);

    for (const char* s : {"llr.T", "rlr.B", "abc.R", "ca.T"}) {
        auto x = W(s);
        auto y = embed(x, x.depth() + 3);
        CHECK(words_equivalent(x, y));
    }
}

TEST_CASE("words of different depth denoting the same point") {
    CHECK(words_equivalent(W("lr.T"), W("rl.B")));  // both fold to 1/2
    CHECK(words_equivalent(W("l.T"), W("rll.B")));
    CHECK_FALSE(words_equivalent(W("l.T"), W("rlr.B")));
}

TEST_CASE("fold isometry values") {
    CHECK(fold_dyadic(W(".B")) == Dyadic{0});
    CHECK(fold_dyadic(Wb(".T")) == Dyadic{1});
    CHECK(fold_dyadic(W("llrr.T")) == Dyadic(BigInt{1}, 2));
    CHECK(fold_dyadic(W("l.B")) == Dyadic{0});
    CHECK(fold_dyadic(W("r.B")) == Dyadic(BigInt{1}, 1));
    for (int n = 1; n <= 8; ++n) {
        auto v = AddressWord::vertex(Arity::Two, 1, n);  // rⁿ.⊤ keeps value 1
        CHECK(fold_dyadic(v) == Dyadic{1});
        AddressWord rb = v;
        rb.base = 0;  // rⁿ.⊥ = (2ⁿ−1)/2ⁿ
        CHECK(fold_dyadic(rb) == Dyadic{1} - Dyadic(BigInt{1}, n));
    }
    CHECK_THROWS_AS(fold_dyadic(W("a.T")), std::invalid_argument);
}

TEST_CASE("fold is an isometry on every level up to 6") {
    for (int depth = 0; depth <= 6; ++depth) {
        std::int64_t total = 1;
        for (int i = 0; i < depth; ++i) total *= 2;
        std::vector<AddressWord> words;
        for (std::int64_t code = 0; code < total; ++code)
            for (BaseSymbol b = 0; b < 2; ++b) {
                AddressWord w;
                w.arity = Arity::Two;
                w.base = b;
                for (int i = 0; i < depth; ++i)
                    w.letters.push_back(static_cast<Letter>((code >> i) & 1));
                words.push_back(w);
            }
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i; j < words.size(); ++j)
                REQUIRE(word_distance(words[i], words[j]) ==
                        (fold_dyadic(words[i]) - fold_dyadic(words[j])).abs());
    }
}

TEST_CASE("oracle table agrees with the recursive distance") {
    for (int depth = 0; depth <= 4; ++depth) {
        auto t = OracleTable::build(Arity::Two, depth);
        CHECK(t.size() == (1 << depth) + 1);  // the level-k dyadics
        for (int c1 = 0; c1 < t.size(); ++c1)
            for (int c2 = 0; c2 < t.size(); ++c2)
                REQUIRE(t.d(c1, c2) ==
                        word_distance(t.representative(c1), t.representative(c2)));
    }
    auto t3 = OracleTable::build(Arity::Three, 3);
    CHECK(t3.size() == 42);
    for (int c1 = 0; c1 < t3.size(); ++c1)
        for (int c2 = 0; c2 < t3.size(); ++c2)
            REQUIRE(t3.d(c1, c2) ==
                    word_distance(t3.representative(c1), t3.representative(c2)));
}

TEST_CASE("oracle class structure") {
    auto t = OracleTable::build(Arity::Three, 2);
    CHECK(t.size() == 15);  // gasket level-2 vertex count 3(3²+1)/2
    CHECK(t.class_of(W("aa.L")) == t.class_of(W("ab.T")));
    CHECK(t.class_of(W("ac.R")) == t.class_of(W("ca.T")));
    auto dd = t.distinguished();
    REQUIRE(dd.size() == 3);
    for (std::size_t i = 0; i < dd.size(); ++i)
        for (std::size_t j = i + 1; j < dd.size(); ++j)
            CHECK(t.d(dd[i], dd[j]) == Dyadic{1});
    CHECK_THROWS_AS(t.class_of(W("a.T")), std::invalid_argument);
    CHECK_THROWS_AS(OracleTable::build(Arity::Two, 11), std::invalid_argument);
}

TEST_CASE("gasket coordinates") {
    CHECK(gasket_coords(W(".T")).str() == "(1/2^1, 1*sqrt(3)/2)");
    CHECK(gasket_coords(W(".L")).str() == "(0, 0*sqrt(3)/2)");
    auto c = gasket_coords(W("a.L"));  // midpoint of L and T
    CHECK(c.x == Dyadic(BigInt{1}, 2));
    CHECK(c.y_scale == Dyadic(BigInt{1}, 1));
    // Glued pairs land on the same planar point.
    auto p = gasket_coords(W("a.L"));
    auto q = gasket_coords(W("b.T"));
    CHECK(p.x == q.x);
    CHECK(p.y_scale == q.y_scale);
    CHECK_THROWS_AS(gasket_coords(W("l.B")), std::invalid_argument);
}

TEST_CASE("depth cap is enforced") {
    auto w = AddressWord::vertex(Arity::Two, 0, 29);
    CHECK_THROWS_AS(word_distance(w, w), std::invalid_argument);
    CHECK_NOTHROW(word_distance(AddressWord::vertex(Arity::Two, 0, 28),
                                AddressWord::vertex(Arity::Two, 1, 28)));
}
