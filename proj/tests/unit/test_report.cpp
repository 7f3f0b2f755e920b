#include <gtest/gtest.h>

#include "spair/constructions.hpp"
#include "spair/report.hpp"

using namespace spair;

namespace {

nlohmann::json J(const char* s) { return nlohmann::json::parse(s); }

ordered_json without_perf(ordered_json j) {
    j.erase("perf");
    return j;
}

Errc error_of(const nlohmann::json& spec) {
    try {
        build_code(parse_code_spec(spec));
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::VerificationFailed;
}

}  // namespace

TEST(CodeSpec, ParsesBothForms) {
    const auto a = build_code(parse_code_spec(J(R"({"p":5,"m":1,"n":15,"lambda":1,"generator":[1,4,0,4,1]})")));
    EXPECT_EQ(a.dimension(), 11u);
    const auto b = build_code(parse_code_spec(J(R"({"p":3,"n":8,"defining_set":[0,1,3,4]})")));
    EXPECT_EQ(b.dimension(), 4u);
    const auto c = build_code(parse_code_spec(J(R"({"p":2,"m":2,"n":5,"generator":[1,1]})")));
    EXPECT_EQ(c.field().order(), 4u);
}

TEST(CodeSpec, Errors) {
    EXPECT_EQ(error_of(J(R"({"p":5,"n":15,"generator":[1,0,1]})")), Errc::NotDivisor);
    EXPECT_EQ(error_of(J(R"({"p":5,"n":15})")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"({"p":5,"n":15,"generator":[1,1],"defining_set":[0]})")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"({"n":15,"generator":[1,1]})")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"({"p":5,"n":"x","generator":[1,1]})")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"({"p":5,"n":15,"generator":[1,9]})")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"({"p":5,"n":15,"generator":["a"]})")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"([1,2])")), Errc::MalformedSpec);
    EXPECT_EQ(error_of(J(R"({"p":6,"n":15,"generator":[1]})")), Errc::NotPrime);
    EXPECT_EQ(error_of(J(R"({"p":3,"n":8,"defining_set":[0,1]})")), Errc::NotUnionOfCosets);
}

TEST(Report, Len24MdsPairCode) {
    std::vector<std::uint64_t> T;
    for (std::uint64_t i = 1; i < 24; ++i)
        if (i != 19 && i != 23) T.push_back(i);
    const auto code = ConstacyclicCode::from_defining_set(prime_field(5), 24, T);
    const auto r = analyze(code);
    EXPECT_EQ(r.d_hamming->value, 19u);
    EXPECT_EQ(r.d_pair->value, 23u);
    EXPECT_TRUE(r.mds_pair);
    const auto j = to_json(r);
    EXPECT_EQ(j["d_pair"]["value"], 23);
    EXPECT_EQ(j["mds_pair"], true);
    EXPECT_EQ(j["bounds"]["bch"], 19);
    EXPECT_FALSE(j["code"]["beta"].is_null());
    EXPECT_TRUE(j.contains("perf"));
}

TEST(Report, RepeatedRootUsesCastagnoli) {
    const Field f = prime_field(7);
    const Poly g = pow(Poly::from_integers(f, {-1, 1}), 4) * pow(Poly::from_integers(f, {-2, 1}), 2) *
                   Poly::from_integers(f, {-4, 1});
    const auto r = analyze(ConstacyclicCode::from_generator(f, 21, 1, g));
    const auto j = to_json(r);
    EXPECT_EQ(j["d_hamming"]["value"], 5);
    EXPECT_EQ(j["d_hamming"]["method"], "castagnoli");
    EXPECT_EQ(j["d_pair"]["value"], 8);
    EXPECT_EQ(j["bounds"]["theorem2"]["condition_used"], 1);
    EXPECT_EQ(j["bounds"]["castagnoli_d_hamming"], 5);
}

TEST(Report, BudgetExceededIsPartial) {
    const auto c = mds_3p_7(7).code;
    AnalyzeOptions opt;
    opt.enumeration.budget = 1000;
    const auto r = analyze(c, opt);
    EXPECT_TRUE(r.budget_exceeded);
    EXPECT_TRUE(r.d_hamming.has_value());
    EXPECT_FALSE(r.d_pair.has_value());
    const auto j = to_json(r);
    EXPECT_EQ(j["status"], "budget_exceeded");
    EXPECT_TRUE(j["d_pair"].is_null());
}

TEST(Report, RoundTripThroughSpec) {
    ConstructOptions opt{true, true, {}};
    for (const auto& built : {mds_3p_6(7, opt), mds_n_6(3, 8, opt), mds_3p_7(5, opt), mds_n_6(5, 24, opt)}) {
        const auto spec = code_spec_json(built.code);
        const auto again = build_code(parse_code_spec(nlohmann::json::parse(spec.dump())));
        EXPECT_EQ(again.generator(), built.code.generator());
        const auto r = analyze(again);
        EXPECT_EQ(r.d_hamming->value, built.d_hamming.value);
        EXPECT_EQ(r.d_pair->value, built.d_pair->value);
        EXPECT_EQ(without_perf(to_json(r)).dump(), without_perf(to_json(analyze(built.code))).dump());
    }
}

TEST(Report, DeterministicAcrossRunsAndThreads) {
    const auto code = mds_3p_6(7).code;
    AnalyzeOptions one, many;
    many.enumeration.threads = 4;
    const auto a = without_perf(to_json(analyze(code, one))).dump();
    EXPECT_EQ(a, without_perf(to_json(analyze(code, one))).dump());
    EXPECT_EQ(a, without_perf(to_json(analyze(code, many))).dump());
}
