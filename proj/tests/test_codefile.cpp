#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "hqc/codefile.hpp"
#include "hqc/families.hpp"

using namespace hqc;

namespace {

std::string data_path(const std::string& name) {
    return std::string(HQC_DATA_DIR) + "/" + name;
}

CodeFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

}  // namespace

TEST(CodeFile, ParsesCosetFile) {
    CodeFile cf = parse_code_file(data_path("gen7.qc"));
    ASSERT_TRUE(cf.n.has_value());
    EXPECT_EQ(*cf.n, 7u);
    ASSERT_TRUE(cf.declared.has_value());
    EXPECT_TRUE(cf.declared->stabilizer_form);
    EXPECT_EQ(cf.declared->n, 7u);
    EXPECT_EQ(cf.declared->k, 1u);
    EXPECT_EQ(cf.declared->m, 1u);
    EXPECT_EQ(cf.declared->K, 2ull);
    EXPECT_EQ(cf.declared->M, 2ull);
    ASSERT_TRUE(cf.declared->d.has_value());
    EXPECT_EQ(*cf.declared->d, 3u);
    EXPECT_EQ(cf.quantum.size(), 5u);
    EXPECT_EQ(cf.classical.size(), 1u);
    EXPECT_FALSE(cf.union_form());
}

TEST(CodeFile, ParsesUnionFile) {
    CodeFile cf = parse_code_file(data_path("example1_union.qc"));
    EXPECT_TRUE(cf.union_form());
    ASSERT_EQ(cf.inner.size(), 2u);
    EXPECT_EQ(cf.inner[0].size(), 5u);
    EXPECT_EQ(cf.inner[1].size(), 5u);
    ASSERT_TRUE(cf.declared.has_value());
    EXPECT_FALSE(cf.declared->stabilizer_form);
    EXPECT_EQ(cf.declared->K, 2ull);
    EXPECT_EQ(cf.declared->M, 2ull);
    StabilizerUnionCode u = to_union(cf);
    EXPECT_EQ(u.M(), 2u);
    EXPECT_THROW(to_hybrid(cf), std::invalid_argument);
}

TEST(CodeFile, RoundTripsThroughWriter) {
    for (const char* name : {"gen7.qc", "gen9.qc", "gen10.qc", "gen11.qc"}) {
        HybridCode h = to_hybrid(parse_code_file(data_path(name)));
        CodeFile back = parse_text(write_code_file(h, 3));
        HybridCode h2 = to_hybrid(back);
        EXPECT_EQ(h.n, h2.n) << name;
        EXPECT_EQ(h.quantum.basis, h2.quantum.basis) << name;
        EXPECT_EQ(h.classical, h2.classical) << name;
        ASSERT_TRUE(back.declared.has_value()) << name;
        EXPECT_EQ(back.declared->k, h.k()) << name;
        EXPECT_EQ(back.declared->m, h.m()) << name;
        EXPECT_EQ(*back.declared->d, 3u) << name;
    }
}

TEST(CodeFile, RoundTripsUnionWriter) {
    StabilizerUnionCode u = to_union(parse_code_file(data_path("example1_union.qc")));
    CodeFile back = parse_text(write_code_file(u, 1));
    ASSERT_TRUE(back.union_form());
    StabilizerUnionCode u2 = to_union(back);
    ASSERT_EQ(u2.M(), u.M());
    for (std::size_t i = 0; i < u.M(); ++i) EXPECT_EQ(u.inner[i].basis, u2.inner[i].basis) << i;
    EXPECT_EQ(back.declared->K, 2ull);
    EXPECT_EQ(back.declared->M, 2ull);
}

TEST(CodeFile, DeclaredForms) {
    DeclaredParams p = parse_declared("[[12,5]]");
    EXPECT_EQ(p.n, 12u);
    EXPECT_EQ(p.k, 5u);
    EXPECT_EQ(p.m, 0u);
    EXPECT_FALSE(p.d.has_value());
    EXPECT_EQ(format_declared(p), "[[12,5]]");

    p = parse_declared(" [[10,3:2]] ");
    EXPECT_EQ(p.m, 2u);
    EXPECT_EQ(p.M, 4ull);
    EXPECT_EQ(format_declared(p), "[[10,3:2]]");

    p = parse_declared("((13,8:3,3))");
    EXPECT_FALSE(p.stabilizer_form);
    EXPECT_EQ(p.K, 8ull);
    EXPECT_EQ(p.M, 3ull);
    EXPECT_EQ(*p.d, 3u);
    EXPECT_EQ(format_declared(p), "((13,8:3,3))");

    p = parse_declared("((6,2))");
    EXPECT_EQ(p.K, 2ull);
    EXPECT_EQ(p.M, 1ull);

    EXPECT_THROW(parse_declared("[12,5]]"), CodeFileParseError);
    EXPECT_THROW(parse_declared("[[12]]"), CodeFileParseError);
    EXPECT_THROW(parse_declared("[[12,5,3,1]]"), CodeFileParseError);
    EXPECT_THROW(parse_declared("[[12,5:1:2]]"), CodeFileParseError);
    EXPECT_THROW(parse_declared("((6,0))"), CodeFileParseError);
    EXPECT_THROW(parse_declared("[[12,x]]"), CodeFileParseError);
}

TEST(CodeFile, ErrorsCarryLineNumbers) {
    try {
        parse_text("n: 2\nquantum:\nXQ\n");
        FAIL() << "expected CodeFileParseError";
    } catch (const CodeFileParseError& e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_NE(std::string(e.what()).find("bad generator row"), std::string::npos);
    }
    try {
        parse_text("n: 2\nquantum:\nXXX\n");
        FAIL() << "expected CodeFileParseError";
    } catch (const CodeFileParseError& e) {
        EXPECT_EQ(e.line, 3u);
    }
    try {
        parse_text("n: 2\nsize: 4\nquantum:\nXX\n");
        FAIL() << "expected CodeFileParseError";
    } catch (const CodeFileParseError& e) {
        EXPECT_EQ(e.line, 2u);
        EXPECT_NE(std::string(e.what()).find("unknown header key"), std::string::npos);
    }
    EXPECT_THROW(parse_text("n: 2\n"), CodeFileParseError);
    EXPECT_THROW(parse_text("n: 2\nquantum:\n"), CodeFileParseError);
    EXPECT_THROW(parse_text("n: 2\nquantum:\nXX\nclassical:\ninner:\nZZ\n"), CodeFileParseError);
    EXPECT_THROW(parse_text("inner:\nXX\nquantum:\nXX\n"), CodeFileParseError);
    EXPECT_THROW(parse_code_file(data_path("no_such_file.qc")), CodeFileParseError);
}

TEST(CodeFile, CommentsAndBlanksSkipped) {
    CodeFile cf = parse_text("# header\n\nn: 2\n  # indented comment\nquantum:\nXX\n\nZZ\n");
    EXPECT_EQ(cf.quantum.size(), 2u);
    HybridCode h = to_hybrid(cf);
    EXPECT_EQ(h.k(), 0u);
    EXPECT_EQ(h.m(), 0u);
}

TEST(CodeFile, ComputedParamsMatchDeclared) {
    for (const char* name : {"gen7.qc", "gen9.qc", "gen10.qc", "gen11.qc"}) {
        CodeFile cf = parse_code_file(data_path(name));
        HybridCode h = to_hybrid(cf);
        DeclaredParams got = computed_params(h, cf.declared->d);
        EXPECT_EQ(format_declared(got), format_declared(*cf.declared)) << name;
    }
}
