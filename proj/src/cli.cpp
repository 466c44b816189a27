#include "qlin/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "qlin/linearize/io.hpp"
#include "qlin/spectra/gap.hpp"
#include "qlin/spectra/ping_pong.hpp"
#include "qlin/spectra/projections.hpp"
#include "qlin/spectra/quaternion.hpp"
#include "qlin/spectra/translation.hpp"
#include "qlin/unittorus/torus.hpp"

namespace qlin::cli {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void check_fields(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

struct Output {
  std::string out_path;
  bool quiet = false;

  void deliver(const json& payload) const {
    const std::string text = payload.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write file: " + out_path);
      out << text;
    }
    if (!quiet) std::cout << text;
  }
};

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json int_matrix_to_json(const exact::IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

std::vector<words::HnnWord> read_hnn_words(const std::string& path) {
  const json j = read_json(path);
  check_fields(j, {"words"}, "words file");
  if (!j.contains("words") || !j.at("words").is_array())
    throw ValidationError(path + ": expected {\"words\": [...]}");
  std::vector<words::HnnWord> out;
  for (const auto& w : j.at("words")) out.push_back(words::hnn_from_json(w));
  return out;
}

std::vector<words::AmalgamWord> read_amalgam_words(const std::string& path) {
  const json j = read_json(path);
  check_fields(j, {"words"}, "words file");
  if (!j.contains("words") || !j.at("words").is_array())
    throw ValidationError(path + ": expected {\"words\": [...]}");
  std::vector<words::AmalgamWord> out;
  for (const auto& w : j.at("words")) out.push_back(words::amalgam_from_json(w));
  return out;
}

// Real / complex / quaternion matrices for the spectra commands; an entry is
// a number, a [re, im] pair, or an [a, b, c, d] quadruple.
struct NumericMatrix {
  Eigen::MatrixXd real;
  Eigen::MatrixXcd complex;
  std::optional<spectra::QuatMatrix> quat;
  bool is_real = false;
};

NumericMatrix parse_numeric_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ValidationError(std::string(what) + ": expected a non-empty array of rows");
  const size_t rows = j.size();
  const size_t cols = j[0].size();
  int kind = 0;  // 0 real, 1 complex, 2 quaternion
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw ValidationError(std::string(what) + ": ragged rows");
    for (const auto& cell : row) {
      if (cell.is_number()) continue;
      if (cell.is_array() && cell.size() == 2) kind = std::max(kind, 1);
      else if (cell.is_array() && cell.size() == 4) kind = std::max(kind, 2);
      else
        throw ValidationError(std::string(what) +
                              ": entries must be numbers, [re,im] pairs or quaternion 4-tuples");
    }
  }
  auto component = [&](const json& cell, int idx) -> double {
    if (cell.is_number()) return idx == 0 ? cell.get<double>() : 0.0;
    return idx < static_cast<int>(cell.size()) ? cell[idx].get<double>() : 0.0;
  };

  NumericMatrix out;
  out.is_real = (kind == 0);
  if (kind == 2) {
    spectra::QuatMatrix q(static_cast<int>(rows), static_cast<int>(cols));
    for (size_t i = 0; i < rows; ++i)
      for (size_t c = 0; c < cols; ++c)
        q(static_cast<int>(i), static_cast<int>(c)) =
            spectra::Quaternion(component(j[i][c], 0), component(j[i][c], 1),
                                component(j[i][c], 2), component(j[i][c], 3));
    out.quat = std::move(q);
    return out;
  }
  out.complex.resize(rows, cols);
  if (kind == 0) out.real.resize(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t c = 0; c < cols; ++c) {
      const double re = component(j[i][c], 0);
      const double im = component(j[i][c], 1);
      out.complex(i, c) = std::complex<double>(re, im);
      if (kind == 0) out.real(i, c) = re;
    }
  return out;
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"exact linearization certificates for HNN extensions and doubles of matrix groups"};
  app.require_subcommand(1);

  std::string spec_path, spec2_path, words_path, word_path, matrix_path, out_path;
  long m_value = 0;
  double tol = 1e-9;
  int radius = 8;
  bool quiet = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON result to this file");
    cmd->add_flag("--quiet", quiet, "suppress stdout");
  };

  CLI::App* reduce = app.add_subcommand("reduce", "Britton-reduce one word against a spec");
  reduce->add_option("--spec", spec_path, "group spec JSON")->required();
  reduce->add_option("--word", word_path, "word JSON")->required();
  add_common(reduce);

  CLI::App* linearize_cmd =
      app.add_subcommand("linearize", "build and validate the symbolic linearization");
  linearize_cmd->add_option("--spec", spec_path, "group spec JSON")->required();
  add_common(linearize_cmd);

  CLI::App* certify = app.add_subcommand("certify", "certify a batch of words");
  certify->add_option("--spec", spec_path, "group spec JSON")->required();
  certify->add_option("--words", words_path, "words JSON")->required();
  add_common(certify);

  CLI::App* dbl = app.add_subcommand("double", "certify amalgam words in the double");
  dbl->add_option("--spec", spec_path, "first factor spec JSON")->required();
  dbl->add_option("--spec2", spec2_path, "second factor spec JSON (defaults to --spec)");
  dbl->add_option("--words", words_path, "amalgam words JSON")->required();
  add_common(dbl);

  CLI::App* spectra_cmd = app.add_subcommand("spectra", "floating-point spectral diagnostics");
  spectra_cmd->require_subcommand(1);
  CLI::App* cartan = spectra_cmd->add_subcommand("cartan", "log singular values");
  CLI::App* jordan = spectra_cmd->add_subcommand("jordan", "log eigenvalue moduli");
  CLI::App* gapfit = spectra_cmd->add_subcommand("gap-fit", "singular value gap growth");
  CLI::App* tlen = spectra_cmd->add_subcommand("tlen", "translation length");
  for (CLI::App* cmd : {cartan, jordan, gapfit, tlen}) {
    cmd->add_option("--matrix", matrix_path, "matrix JSON")->required();
    cmd->add_option("--tol", tol, "relative tolerance");
    add_common(cmd);
  }
  gapfit->add_option("--radius", radius, "ball radius");

  CLI::App* unittorus_cmd = app.add_subcommand("unittorus", "unit-torus certificates");
  CLI::App* ut_build = unittorus_cmd->add_subcommand("build", "build a density certificate");
  ut_build->add_option("--m", m_value, "squarefree radicand of the real quadratic field")
      ->required();
  ut_build->add_option("--tol", tol, "relative tolerance");
  add_common(ut_build);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const Output output{out_path, quiet};

  if (reduce->parsed()) {
    const linearize::PiQ pi(linearize::rep_spec_from_json(read_json(spec_path)));
    const words::HnnWord word = words::hnn_from_json(read_json(word_path));
    const words::HnnWord red = words::britton_reduce(word, pi.cyclic());
    json out;
    out["word"] = words::to_json(word);
    out["reduced"] = words::to_json(red);
    out["in_base_group"] = red.in_base_group();
    output.deliver(out);
    return 0;
  }

  if (linearize_cmd->parsed()) {
    const linearize::RepSpec spec = linearize::rep_spec_from_json(read_json(spec_path));
    const linearize::PiQ pi(spec);
    const auto& v = pi.validated();
    json out;
    out["status"] = "ok";
    if (!spec.name.empty()) out["name"] = spec.name;
    out["d"] = spec.d;
    out["m"] = spec.m;
    out["s1"] = exact::to_string(v.w_in_basis()(0, 0));
    out["sd"] = exact::to_string(v.w_in_basis()(spec.d - 1, spec.d - 1));
    json weights = json::array();
    for (const auto& c : spec.weights.chi) weights.push_back(exact::to_string(c));
    out["weights"] = weights;
    out["spread"] = exact::to_string(pi.weights().spread());
    out["h"] = exact::to_json(v.basis());
    output.deliver(out);
    return 0;
  }

  if (certify->parsed()) {
    const linearize::PiQ pi(linearize::rep_spec_from_json(read_json(spec_path)));
    const auto batch = read_hnn_words(words_path);
    json certs = json::array();
    for (const auto& word : batch)
      certs.push_back(linearize::to_json(pi.certify(word), pi.cyclic().w));
    json out;
    out["certificates"] = certs;
    output.deliver(out);
    return 0;
  }

  if (dbl->parsed()) {
    const json spec1 = read_json(spec_path);
    const json spec2 = spec2_path.empty() ? spec1 : read_json(spec2_path);
    const auto batch = read_amalgam_words(words_path);
    const linearize::DoubleRep rep(linearize::PiQ(linearize::rep_spec_from_json(spec1)),
                                   linearize::PiQ(linearize::rep_spec_from_json(spec2)));
    json certs = json::array();
    for (const auto& word : batch) certs.push_back(linearize::to_json(rep.certify(word)));
    json out;
    out["certificates"] = certs;
    output.deliver(out);
    return 0;
  }

  if (spectra_cmd->parsed()) {
    const json mj = read_json(matrix_path);
    json out;
    if (cartan->parsed() || jordan->parsed()) {
      check_fields(mj, {"matrix"}, "matrix file");
      if (!mj.contains("matrix")) throw ValidationError("matrix file: missing \"matrix\"");
      const NumericMatrix nm = parse_numeric_matrix(mj.at("matrix"), "matrix");
      if (!nm.is_real)
        throw ValidationError("cartan/jordan expect a real matrix");
      if (cartan->parsed()) {
        out["cartan"] = vector_to_json(spectra::cartan_projection(nm.real, tol));
      } else {
        double consistency = 0.0;
        out["jordan"] = vector_to_json(spectra::jordan_projection(nm.real, tol, &consistency));
        out["power_consistency"] = consistency;
      }
    } else if (gapfit->parsed()) {
      check_fields(mj, {"generators"}, "matrix file");
      if (!mj.contains("generators") || !mj.at("generators").is_array() ||
          mj.at("generators").empty())
        throw ValidationError("gap-fit input: expected {\"generators\": [matrix, ...]}");
      std::vector<Eigen::MatrixXd> gens;
      for (const auto& g : mj.at("generators")) {
        const NumericMatrix nm = parse_numeric_matrix(g, "generator");
        if (!nm.is_real) throw ValidationError("gap-fit expects real generators");
        gens.push_back(nm.real);
      }
      const spectra::GapFit fit = spectra::anosov_gap_fit(gens, radius, 1, tol);
      json table = json::array();
      for (const auto& row : fit.table)
        table.push_back(json{{"length", row.length}, {"min_gap", row.min_gap},
                             {"witness", row.witness}});
      out["gap_fit"] = json{{"c", fit.c}, {"C", fit.C}, {"table", table},
                            {"certified", fit.c > 0}};
    } else {
      check_fields(mj, {"matrix"}, "matrix file");
      if (!mj.contains("matrix")) throw ValidationError("matrix file: missing \"matrix\"");
      const NumericMatrix nm = parse_numeric_matrix(mj.at("matrix"), "matrix");
      const spectra::TranslationLength len =
          nm.quat ? spectra::translation_length_quat(*nm.quat, tol)
                  : spectra::translation_length_via_rep(nm.complex, tol);
      out["length"] = len.value;
      out["elliptic"] = len.elliptic;
    }
    output.deliver(out);
    return 0;
  }

  if (ut_build->parsed()) {
    const unittorus::TorusCertificate cert = unittorus::zariski_dense_cyclic(m_value, tol);
    json out;
    out["m"] = cert.m;
    out["unit"] = json{{"x", cert.unit.x.get_str()}, {"y", cert.unit.y.get_str()}};
    out["matrix"] = int_matrix_to_json(cert.matrix);
    out["log_vector"] = json::array({cert.log_vector[0], cert.log_vector[1]});
    out["galois_generators"] = cert.galois_generators;
    out["rank"] = cert.rank;
    out["verdict"] = cert.dense ? "dense" : "not-dense";
    output.deliver(out);
    return 0;
  }

  return 2;  // unreachable: require_subcommand(1)
}

}  // namespace

int run(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qlin::cli
