#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include <twistor/app/checks.hpp>
#include <twistor/app/classify.hpp>
#include <twistor/app/documents.hpp>
#include <twistor/app/sampling.hpp>
#include <twistor/nijenhuis.hpp>

using namespace twistor;
using namespace twistor::app;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1"), Complex(1, 0));
  EXPECT_EQ(parse_complex("-2.5"), Complex(-2.5, 0));
  EXPECT_EQ(parse_complex("1+2i"), Complex(1, 2));
  EXPECT_EQ(parse_complex(" 1 - 2i "), Complex(1, -2));
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("3i"), Complex(0, 3));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), Complex(1e-3, 20));
  EXPECT_EQ(parse_complex("+0.5-i"), Complex(0.5, -1));
  EXPECT_THROW(parse_complex(""), ParseError);
  EXPECT_THROW(parse_complex("abc"), ParseError);
  EXPECT_THROW(parse_complex("1+2j"), ParseError);
}

TEST(ParseCp3, FourCoordinates) {
  EXPECT_TRUE(equivalent(parse_cp3("1, 1, -1, 1"), CP3Point(1, 1, -1, 1)));
  EXPECT_TRUE(equivalent(parse_cp3("0,1+i,0,0"), CP3Point(0, Complex(1, 1), 0, 0)));
  EXPECT_THROW(parse_cp3("1,0,0"), ParseError);
  EXPECT_THROW(parse_cp3("0,0,0,0"), ParseError);
}

TEST(FormatReal, SeventeenDigitsRoundTrip) {
  const double x = 0.1 + 0.2;
  EXPECT_EQ(format_real(x), "0.30000000000000004");
  EXPECT_EQ(std::stod(format_real(calibrated_max_norm())), calibrated_max_norm());
  EXPECT_EQ(format_complex(Complex(1, -0.5)), "1-0.5i");
}

TEST(StructureDocument, RoundTrip) {
  const StructureDocument doc = StructureDocument::from_acs(ank_structure(), "I_N");
  const StructureDocument back = parse_structure_document(to_json(doc));
  EXPECT_EQ(back.matrix, doc.matrix);
  EXPECT_EQ(back.label, doc.label);
  EXPECT_EQ(back.to_acs(), ank_structure());
  EXPECT_EQ(doc.matrix[3], ank_structure().matrix()(0, 3));  // row-major
}

TEST(StructureDocument, Rejections) {
  EXPECT_THROW(parse_structure_document("{"), ParseError);
  EXPECT_THROW(parse_structure_document(R"({"matrix": [1, 2]})"), ParseError);
  EXPECT_THROW(parse_structure_document(R"({"label": "x"})"), ParseError);
  std::string bad = R"({"matrix": [)";
  for (int k = 0; k < 36; ++k) bad += (k ? "," : "") + std::to_string(k);
  bad += "]}";
  const StructureDocument doc = parse_structure_document(bad);
  EXPECT_FALSE(doc.label);
  EXPECT_THROW(doc.to_acs(), Error);
}

TEST(Sampling, SetNames) {
  for (auto s : {SampleSet::Ank, SampleSet::Integrable, SampleSet::Random, SampleSet::Polar, SampleSet::Edge01})
    EXPECT_EQ(parse_sample_set(to_string(s)), s);
  EXPECT_THROW(parse_sample_set("nope"), BadSetError);
}

TEST(Sampling, AnkRowsAtMaximum) {
  for (const CloudRow& r : sample(SampleSet::Ank, 100, 1)) {
    EXPECT_TRUE(r.ank);
    EXPECT_NEAR(r.nijenhuis_norm, calibrated_max_norm(), 1e-6);
    for (double b : r.b) EXPECT_GE(b, 0.0);
  }
}

TEST(Sampling, IntegrableRowsVanish) {
  for (const CloudRow& r : sample(SampleSet::Integrable, 100, 1)) {
    EXPECT_LT(r.nijenhuis_norm, 1e-6);
    EXPECT_TRUE(r.integrable);
  }
}

TEST(Sampling, EdgeRowsOnFace) {
  for (const CloudRow& r : sample(SampleSet::Edge01, 100, 1)) {
    EXPECT_NEAR(r.b[2], 0.0, 1e-9);
    EXPECT_NEAR(r.b[3], 0.0, 1e-9);
  }
}

TEST(Sampling, PolarRowsBalanced) {
  // |u0|^2 + |u3|^2 = |u1|^2 + |u2|^2 on the polar set of e^5 ^ e^6
  for (const CloudRow& r : sample(SampleSet::Polar, 100, 1)) EXPECT_NEAR(r.b[0] + r.b[3], 0.5, 1e-9);
}

TEST(Sampling, DeterministicAndIndexStable) {
  const auto a = sample(SampleSet::Random, 20, 9);
  const auto b = sample(SampleSet::Random, 30, 9, false);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].b, b[k].b);
    EXPECT_EQ(a[k].nijenhuis_norm, b[k].nijenhuis_norm);
  }
  const auto c = sample(SampleSet::Random, 20, 10);
  EXPECT_NE(a[0].b, c[0].b);
}

TEST(Csv, ByteIdenticalAndReadsBack) {
  for (auto set : {SampleSet::Ank, SampleSet::Integrable, SampleSet::Random, SampleSet::Polar, SampleSet::Edge01}) {
    const auto rows = sample(set, 25, 4);
    std::ostringstream first, second;
    write_csv(first, rows);
    write_csv(second, sample(set, 25, 4));
    EXPECT_EQ(first.str(), second.str());
    EXPECT_EQ(first.str().find('\r'), std::string::npos);
    EXPECT_EQ(first.str().substr(0, kCsvHeader.size() + 1), std::string(kCsvHeader) + "\n");

    std::istringstream in(first.str());
    const auto back = read_csv(in);
    ASSERT_EQ(back.size(), rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      EXPECT_EQ(back[k].b, rows[k].b);
      EXPECT_EQ(back[k].nijenhuis_norm, rows[k].nijenhuis_norm);
      EXPECT_EQ(back[k].integrable, rows[k].integrable);
      EXPECT_EQ(back[k].ank, rows[k].ank);
      EXPECT_TRUE(row_consistent(back[k]));
    }
  }
}

TEST(Csv, MalformedInput) {
  std::istringstream no_header("1,2,3\n");
  EXPECT_THROW(read_csv(no_header), ParseError);
  std::istringstream short_row(std::string(kCsvHeader) + "\n0.25,0.25,0.25\n");
  EXPECT_THROW(read_csv(short_row), ParseError);
  CloudRow bad;
  bad.b = {0.5, 0.5, 0.5, 0.0};
  EXPECT_FALSE(row_consistent(bad));
}

TEST(Classify, FactorSwap) {
  const Classification c = classify(ank_structure());
  EXPECT_TRUE(c.ank);
  EXPECT_FALSE(c.integrable);
  EXPECT_TRUE(equivalent(c.cp3, CP3Point(1, 1, -1, 1)));
  for (double b : c.tetra.b) EXPECT_NEAR(b, 0.25, 1e-12);
  EXPECT_TRUE(c.polar_e56);
  const auto j = nlohmann::json::parse(to_json(c));
  EXPECT_TRUE(j["ank"].get<bool>());
  EXPECT_EQ(j["cp3"].size(), 4u);
}

TEST(Classify, HopfFromCp3) {
  const Classification c = classify(cp3_to_acs(parse_cp3("1,0,0,-1")));
  EXPECT_TRUE(c.integrable);
  EXPECT_LT((c.acs.matrix() - hopf_structure().matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Classify, MembershipResidualsNamed) {
  Mat6 m = Mat6::Random();
  const auto j = nlohmann::json::parse(membership_json(inspect(m)));
  EXPECT_FALSE(j["in_z"].get<bool>());
  EXPECT_TRUE(j["residuals"].contains("complex"));
  EXPECT_TRUE(j["residuals"].contains("orthogonal"));
  EXPECT_TRUE(j["residuals"].contains("orientation"));
}

TEST(Checks, AllPassWithSchema) {
  const auto records = run_checks();
  EXPECT_TRUE(all_passed(records));
  std::set<std::string> names;
  const auto j = nlohmann::json::parse(checks_to_json(records));
  ASSERT_EQ(j.size(), records.size());
  for (const auto& rec : j) {
    std::set<std::string> keys;
    for (const auto& [k, v] : rec.items()) keys.insert(k);
    EXPECT_EQ(keys, (std::set<std::string>{"name", "status", "residual", "paper_value", "measured_value"}));
    EXPECT_EQ(rec["status"], "pass") << rec["name"];
    names.insert(rec["name"].get<std::string>());
  }
  for (const char* n : {"lemma1_edge_form", "lemma2_hopf", "lemma2_ank", "lemma3_generic", "lemma3_seam",
                        "statement1_integrable", "statement2_proportionality", "statement2_maximum",
                        "theorem_circles_are_ank", "theorem_ank_are_circles", "polar_containment",
                        "nabla_omega_basis_diagonal", "nabla_omega_mixed_direction"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Checks, PublishedConstantsReportedBesideMeasured) {
  for (const auto& r : run_checks()) {
    if (r.name == "statement2_maximum") {
      EXPECT_NEAR(*r.paper_value, 8 * std::sqrt(3.0), 1e-12);
      EXPECT_NEAR(*r.measured_value, calibrated_max_norm(), 1e-6);
    }
    if (r.name == "nabla_omega_mixed_direction") {
      EXPECT_EQ(*r.paper_value, -1.0);
      EXPECT_NEAR(*r.measured_value, -0.5, 1e-12);
    }
  }
}

TEST(Checks, OppositeEigenSignFailsCorrespondence) {
  VerifyOptions opts;
  opts.sign = EigenSign::Minus;
  const auto records = run_checks(opts);
  EXPECT_FALSE(all_passed(records));
  for (const auto& r : records)
    if (r.name.rfind("lemma2", 0) == 0) EXPECT_FALSE(r.passed) << r.name;
}
