#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sprkit/json_io.hpp"

using namespace sprkit;
using oracle::DMat;

namespace {

LeftWitnessCertificate<DynRing> diag_cert() {
  const auto a = parse_matrix("[[2,0],[0,1]]", parse_ring_spec("zmod:4"));
  return right_to_left_certificate(RightWitnessInstance<DynRing>(a, 2, DMat::identity(a.ring(), 2)));
}

std::string emit(const LeftWitnessCertificate<DynRing>& c) {
  std::ostringstream os;
  emit_certificate(c, os);
  return os.str();
}

}  // namespace

TEST(CertificateJson, Schema) {
  const Json j = certificate_to_json(diag_cert());
  for (const char* key : {"ring", "dim", "n", "N", "A", "X", "p_coeffs", "C", "w", "Y", "verified", "identities"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["ring"], "zmod:4");
  EXPECT_EQ(j["N"], 4);
  EXPECT_EQ(j["Y"], Json::parse(R"([["0","0"],["0","1"]])"));
  EXPECT_EQ(j["p_coeffs"], Json::parse(R"(["0","0","0","0","1","2","1"])"));
  EXPECT_TRUE(j["verified"].get<bool>());
  for (const auto& id : j["identities"]) EXPECT_TRUE(id["holds"].get<bool>()) << id["name"];
}

TEST(CertificateJson, EmitParseVerify) {
  const auto cert = diag_cert();
  const auto text = emit(cert);
  const auto back = certificate_from_json(Json::parse(text));
  EXPECT_EQ(back, cert);
  EXPECT_TRUE(verify_certificate(back).verified);
}

TEST(CertificateJson, EmitTwiceIsByteIdentical) {
  const auto cert = diag_cert();
  EXPECT_EQ(emit(cert), emit(cert));
  EXPECT_EQ(emit(cert), emit(certificate_from_json(Json::parse(emit(cert)))));
}

TEST(CertificateJson, RefusesUnverified) {
  auto cert = diag_cert();
  cert.y = cert.y + DMat::identity(cert.y.ring(), 2);
  std::ostringstream os;
  try {
    emit_certificate(cert, os);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition_failed);
  }
  EXPECT_TRUE(os.str().empty());
}

TEST(CertificateJson, RoundTripGenerated) {
  std::mt19937_64 rng(17);
  for (const char* r : {"int", "zmod:12", "quot:poly:zmod:3:t:t^2", "poly:int:s"}) {
    const auto spec = parse_ring_spec(r);
    for (int i = 0; i < 25; ++i) {
      const auto g = oracle::generated_instance(spec, 1 + i % 3, rng);
      const auto cert = right_to_left_certificate(RightWitnessInstance<DynRing>(g.a, g.n, g.x));
      const auto text = emit(cert);
      const auto back = certificate_from_json(Json::parse(text));
      ASSERT_EQ(back, cert) << r;
      ASSERT_EQ(emit(back), text);
    }
  }
}

TEST(CertificateJson, TamperedFileFailsVerification) {
  Json j = Json::parse(emit(diag_cert()));
  j["Y"] = Json::parse(R"([["1","0"],["0","2"]])");
  const auto v = verify_certificate(certificate_from_json(j));
  EXPECT_FALSE(v.verified);
  ASSERT_NE(v.first_failure(), nullptr);
  EXPECT_EQ(v.first_failure()->name, identity_names::left_n);
}

TEST(CertificateJson, MalformedDocuments) {
  const Json good = Json::parse(emit(diag_cert()));
  auto expect_error = [](const Json& j) { EXPECT_THROW(certificate_from_json(j), Error) << j.dump(); };
  Json missing = good;
  missing.erase("Y");
  expect_error(missing);
  Json bad_ring = good;
  bad_ring["ring"] = "zmod:seven";
  expect_error(bad_ring);
  Json bad_dim = good;
  bad_dim["dim"] = 3;
  expect_error(bad_dim);
  Json bad_entry = good;
  bad_entry["A"][0][0] = "q";
  expect_error(bad_entry);
  Json float_entry = good;
  float_entry["A"][0][0] = 1.5;
  expect_error(float_entry);
}

TEST(CanonicalJson, SortedKeysNoFloats) {
  const auto text = canonical_dump(certificate_to_json(diag_cert()));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"A\""), text.find("\"C\""));
  EXPECT_LT(text.find("\"dim\""), text.find("\"ring\""));
  std::function<void(const Json&)> no_floats = [&](const Json& j) {
    EXPECT_FALSE(j.is_number_float()) << j.dump();
    if (j.is_structured())
      for (const auto& child : j) no_floats(child);
  };
  no_floats(Json::parse(text));
}

TEST(Hash, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
