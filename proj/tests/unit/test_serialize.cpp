#include <gtest/gtest.h>

#include "cubiccert/errors.hpp"
#include "cubiccert/serialize.hpp"

namespace cubiccert {
namespace {

TEST(CertificateJson, RoundTripsEveryEngineOutput) {
  for (int n = 4; n <= 12; ++n) {
    for (const auto& t : enumerate_signatures(n, 3)) {
      std::vector<Certificate> certs{certify_uct(t), conclude_a0_trivial(t)};
      if (n % 2 == 0) certs.push_back(conclude_a0_trivial(t, Route::CoprimeDegrees));
      for (const auto& c : certs) {
        const std::string text = to_json(c).dump();
        const Certificate back = certificate_from_json(Json::parse(text));
        ASSERT_EQ(back, c) << text;
        EXPECT_TRUE(validate_certificate(back));
        EXPECT_EQ(to_json(back).dump(), text);
      }
    }
  }
}

TEST(CertificateJson, Shape) {
  const Json j = to_json(derive_unirationality(TypeSignature({3, 3})));
  EXPECT_EQ(j.begin().key(), "conclusion");
  EXPECT_EQ(j["conclusion"]["kind"], "Unirational");
  EXPECT_EQ(j["conclusion"]["degree"], 3);
  EXPECT_EQ(j["conclusion"]["type"], Json::array({3, 3}));
  EXPECT_EQ(j["rule"], "R-SATZ1");
  EXPECT_EQ(j["premises"].size(), 1u);
  EXPECT_FALSE(to_json(certify_uct(TypeSignature({1, 1, 1, 1})))["conclusion"].contains("degree"));
}

TEST(CertificateJson, RationalKindNormalizes) {
  const Json j = Json::parse(R"({"conclusion":{"kind":"Rational","type":[3,1]},"rule":"BASE4","citation":"c","premises":[]})");
  const Certificate c = certificate_from_json(j);
  EXPECT_EQ(c.conclusion, Statement::rational(TypeSignature({3, 1})));
}

TEST(CertificateJson, MalformedInputs) {
  const char* bad[] = {
      R"([])",
      R"({"conclusion":{"kind":"UCT","type":[1,1,1,1]},"rule":"BASE4","citation":"c"})",
      R"({"conclusion":{"kind":"UCT","type":[1,1,1,1]},"rule":"NOPE","citation":"c","premises":[]})",
      R"({"conclusion":{"kind":"UCT","type":[0,4]},"rule":"BASE4","citation":"c","premises":[]})",
      R"({"conclusion":{"kind":"Unirational","type":[3,1]},"rule":"BASE4","citation":"c","premises":[]})",
      R"({"conclusion":{"kind":"UCT","type":[1,1,1,1]},"rule":"UCT-TO-A0","citation":"c","premises":[{"rule":"BASE4"}]})",
  };
  for (const char* text : bad) {
    try {
      certificate_from_json(Json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedCertificate) << text;
    }
  }
  try {
    certificate_from_json(Json::parse(bad[5]));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("$.premises[0]"), std::string::npos) << e.what();
  }
}

TEST(FiberJson, Shape) {
  FiberReport r;
  r.prime = 7;
  r.samples = 4;
  r.histogram = {{0, 1}, {3, 3}};
  r.mean = mpq_class(9, 4);
  EXPECT_EQ(to_json(r).dump(), R"({"prime":7,"samples":4,"histogram":{"0":1,"3":3},"mean":"9/4"})");
}

TEST(VerdictJson, Shape) {
  const CubicForm f = parse_form("x0^3 + (x1+x2)^3");
  const Json j = to_json(form_smoothness(f, decompose_blocks(f)));
  EXPECT_EQ(j["verdict"], "Singular");
  EXPECT_EQ(j["witness"]["kind"], "SingularPoint");
  EXPECT_EQ(j["witness"]["coords"].size(), 3u);
}

}  // namespace
}  // namespace cubiccert
