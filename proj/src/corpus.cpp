#include "latred/corpus.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "latred/cvp.hpp"
#include "latred/reference.hpp"

namespace latred {

using nlohmann::json;

std::size_t CorpusReport::failures() const {
  std::size_t bad = lambda_mismatches.size();
  for (const auto& r : runs)
    if (!r.passed()) ++bad;
  return bad;
}

namespace {

std::size_t scaled_input_size(const LatticeBasis& basis) {
  const Rational scale(common_denominator(basis.matrix()));
  std::vector<RationalVector> cols;
  for (const auto& c : basis.matrix().columns()) cols.push_back(scale * c);
  return input_size_parameter(LatticeBasis(std::move(cols)));
}

}  // namespace

std::size_t bit_gate_for(const LatticeBasis& basis) {
  const std::size_t m = scaled_input_size(basis);
  return 64 * m * m;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    if (entry.path().filename() == kExpectationsFile) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<CorpusExpectation> build_expectations(const std::filesystem::path& dir) {
  std::vector<CorpusExpectation> out;
  for (const auto& path : corpus_files(dir)) {
    const InstanceFile inst = read_instance(path);
    CorpusExpectation e;
    e.file = path.filename().string();
    if (inst.target) e.dist_sq = brute_distance_sq(inst.basis, *inst.target);
    e.lambda1_sq = successive_minima(inst.basis).front();
    e.input_size = scaled_input_size(inst.basis);
    e.bit_gate = 64 * e.input_size * e.input_size;
    out.push_back(std::move(e));
  }
  return out;
}

std::string serialize_expectations(const std::vector<CorpusExpectation>& expectations) {
  json arr = json::array();
  for (const auto& e : expectations) {
    json item;
    item["file"] = e.file;
    if (e.dist_sq) item["dist2"] = to_string(*e.dist_sq);
    item["lambda1_sq"] = to_string(e.lambda1_sq);
    item["M"] = e.input_size;
    item["bit_gate"] = e.bit_gate;
    arr.push_back(item);
  }
  json doc;
  doc["instances"] = arr;
  return doc.dump(2) + "\n";
}

std::vector<CorpusExpectation> parse_expectations(const std::string& text) {
  try {
    const json doc = json::parse(text);
    std::vector<CorpusExpectation> out;
    for (const auto& item : doc.at("instances")) {
      CorpusExpectation e;
      e.file = item.at("file").get<std::string>();
      if (item.contains("dist2")) e.dist_sq = parse_rational(item["dist2"].get<std::string>());
      e.lambda1_sq = parse_rational(item.at("lambda1_sq").get<std::string>());
      e.input_size = item.at("M").get<std::size_t>();
      e.bit_gate = item.at("bit_gate").get<std::size_t>();
      out.push_back(std::move(e));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed expectations file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed expectations file: ") + e.what());
  }
}

std::vector<OracleSpec> corpus_oracles(const InstanceFile& instance) {
  return {OracleSpec::exact(), OracleSpec::lll(instance.n()),
          OracleSpec::adversarial(Rational(3, 2), instance.seed),
          OracleSpec::adversarial(Rational(2), instance.seed)};
}

CorpusReport run_corpus(const std::filesystem::path& dir) {
  std::map<std::string, CorpusExpectation> expected;
  for (auto& e : parse_expectations(read_text(dir / kExpectationsFile)))
    expected.emplace(e.file, std::move(e));

  CorpusReport report;
  for (const auto& path : corpus_files(dir)) {
    const std::string name = path.filename().string();
    const auto it = expected.find(name);
    if (it == expected.end()) throw ParseError("no expectations recorded for " + name);
    const CorpusExpectation& exp = it->second;
    const InstanceFile inst = read_instance(path);
    ++report.instances;

    if (norm_sq(enumerate_shortest(inst.basis).coords) != exp.lambda1_sq)
      report.lambda_mismatches.push_back(name);
    if (!inst.target || !exp.dist_sq) continue;

    for (const OracleSpec& spec : corpus_oracles(inst)) {
      const CvpResult res = cvp_solve({inst.basis, *inst.target, spec});
      CorpusRun run;
      run.file = name;
      run.oracle = spec.to_string();
      run.dist_sq = res.dist_sq_achieved;
      run.bound_sq = res.bound_factor_sq * *exp.dist_sq;
      run.member = is_member(inst.basis, res.answer.coords).has_value();
      run.bound_ok = run.dist_sq <= run.bound_sq;
      run.bits = collect_bit_stats(res.trace);
      run.bit_gate = exp.bit_gate;
      report.max_bits = std::max(report.max_bits, run.bits);
      report.runs.push_back(std::move(run));
    }
  }
  return report;
}

}  // namespace latred
