#include "barriers/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace barriers {

bool VerificationReport::all_passed() const {
  for (const auto& c : claims)
    if (c.status == "fail") return false;
  return true;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_report(const VerificationReport& report,
                        const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "report v1";
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
      nlohmann::ordered_json jc;
      jc["id"] = c.id;
      jc["inputs"] = c.inputs;
      jc["analytic"] = c.analytic;
      jc["measured"] = c.measured;
      jc["status"] = c.status;
      j["claims"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
  }
  if (format == "table") {
    std::size_t idw = 2;
    for (const auto& c : report.claims) idw = std::max(idw, c.id.size());
    std::ostringstream out;
    out << "suite " << report.suite << " (seed " << report.seed << ")\n";
    for (const auto& c : report.claims) {
      const char* mark = c.status == "pass" ? "ok  " :
                         c.status == "fail" ? "FAIL" : "info";
      out << std::left << std::setw(static_cast<int>(idw) + 2) << c.id << mark
          << "  " << c.analytic << " | " << c.measured << "  ["
          << std::fixed << std::setprecision(2) << c.runtime_secs << "s]\n";
    }
    return out.str();
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "id,status,analytic,measured,runtime_secs\n";
    for (const auto& c : report.claims)
      out << csv_field(c.id) << ',' << csv_field(c.status) << ','
          << csv_field(c.analytic) << ',' << csv_field(c.measured) << ','
          << std::fixed << std::setprecision(3) << c.runtime_secs << "\n";
    return out.str();
  }
  throw std::invalid_argument("unknown report format: " + format);
}

CodeManifest CodeManifest::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  nlohmann::json j;
  in >> j;
  CodeManifest m;
  m.kind = j.at("kind").get<std::string>();
  for (auto& [role, file] : j.at("matrices").items())
    m.matrices[role] = file.get<std::string>();
  if (j.contains("block_layout"))
    for (auto& b : j["block_layout"])
      m.blocks.push_back({b.at("name").get<std::string>(),
                          b.at("offset").get<std::size_t>(),
                          b.at("length").get<std::size_t>()});
  if (j.contains("params"))
    for (auto& [key, val] : j["params"].items())
      m.params[key] = val.get<std::size_t>();
  if (j.contains("provenance")) m.provenance = j["provenance"].get<std::string>();
  if (j.contains("seed")) m.seed = j["seed"].get<uint64_t>();
  return m;
}

void CodeManifest::write(const std::string& path) const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["matrices"] = nlohmann::ordered_json::object();
  for (const auto& [role, file] : matrices) j["matrices"][role] = file;
  j["block_layout"] = nlohmann::ordered_json::array();
  for (const auto& b : blocks)
    j["block_layout"].push_back(
        {{"name", b.name}, {"offset", b.offset}, {"length", b.length}});
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, val] : params) j["params"][key] = val;
  j["provenance"] = provenance;
  j["seed"] = seed;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

namespace {

std::string joined(const std::string& base, const std::string& rel) {
  if (rel.empty() || rel.front() == '/' || base.empty()) return rel;
  return base + "/" + rel;
}

}  // namespace

ClassicalCode load_classical(const CodeManifest& m, const std::string& base_dir) {
  if (m.kind != "classical")
    throw std::runtime_error("manifest does not describe a classical code");
  return ClassicalCode(read_pcm_file(joined(base_dir, m.matrices.at("H"))));
}

CssCode load_css(const CodeManifest& m, const std::string& base_dir) {
  if (m.kind != "css")
    throw std::runtime_error("manifest does not describe a css code");
  BitMat hx = read_pcm_file(joined(base_dir, m.matrices.at("H_X")));
  BitMat hz = read_pcm_file(joined(base_dir, m.matrices.at("H_Z")));
  std::optional<BitMat> mx, mz;
  if (m.matrices.count("meta_X"))
    mx = read_pcm_file(joined(base_dir, m.matrices.at("meta_X")));
  if (m.matrices.count("meta_Z"))
    mz = read_pcm_file(joined(base_dir, m.matrices.at("meta_Z")));
  return CssCode(std::move(hx), std::move(hz), std::move(mx), std::move(mz),
                 m.blocks);
}

}  // namespace barriers
