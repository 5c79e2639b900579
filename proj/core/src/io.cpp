#include "bmbp/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bmbp {

using json = nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json complex_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

cplx complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("expected a number or an [re, im] pair");
}

json matrix_json(const Mat& a) {
  json rows = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(complex_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from(const json& j, Index rows = -1, Index cols = -1) {
  if (!j.is_array()) bad("matrix must be a list of rows");
  const Index r = static_cast<Index>(j.size());
  if (r == 0) {
    if (rows > 0) bad("empty matrix");
    return Mat(0, cols < 0 ? 0 : cols);
  }
  // Flat row-major list when the size is known and the entries are not rows.
  if (rows > 0 && cols > 0 && r == rows * cols) {
    bool nested = r == rows;
    for (const auto& e : j) nested = nested && e.is_array() && static_cast<Index>(e.size()) == cols;
    if (!nested) {
      Mat a(rows, cols);
      for (Index i = 0; i < rows; ++i)
        for (Index c = 0; c < cols; ++c) a(i, c) = complex_from(j[static_cast<size_t>(i * cols + c)]);
      return a;
    }
  }
  if (!j[0].is_array()) bad("matrix rows must be lists");
  const Index c = static_cast<Index>(j[0].size());
  Mat a(r, c);
  for (Index i = 0; i < r; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) bad("matrix rows differ in length");
    for (Index q = 0; q < c; ++q) a(i, q) = complex_from(row[static_cast<size_t>(q)]);
  }
  if ((rows >= 0 && r != rows) || (cols >= 0 && c != cols))
    throw Error(ErrorCode::DimensionMismatch, "matrix does not have the declared size");
  return a;
}

json vector_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

std::vector<cplx> points_from(const json& j) {
  if (!j.is_array()) bad("nodes must be a list");
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from(e));
  return out;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<Index> blocks_from(const json& j, const char* key) {
  std::vector<Index> out;
  for (const long long b : field<std::vector<long long>>(j, key)) {
    if (b <= 0) bad("block sizes must be positive");
    out.push_back(static_cast<Index>(b));
  }
  return out;
}

}  // namespace

std::string polynomial_to_json(const MatrixPolynomial& P) {
  json j;
  j["basis"] = basis_name(P.kind());
  if (P.basis().nodes) {
    json nodes = json::array();
    for (const cplx x : P.nodes().points()) nodes.push_back(complex_json(x));
    j["nodes"] = nodes;
    if (P.kind() == BasisKind::Lagrange) {
      json w = json::array();
      for (const cplx x : P.nodes().weights()) w.push_back(complex_json(x));
      j["weights"] = w;
    }
  }
  j["grade"] = P.grade();
  j["size"] = {P.rows(), P.cols()};
  json coeffs = json::array();
  for (const Mat& c : P.coeffs()) coeffs.push_back(matrix_json(c));
  j["coeffs"] = coeffs;
  return j.dump(2);
}

MatrixPolynomial polynomial_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) bad("polynomial file must be a JSON object");
  const BasisKind kind = basis_from_name(field<std::string>(j, "basis"));
  const auto size = field<std::vector<long long>>(j, "size");
  if (size.size() != 2 || size[0] <= 0 || size[1] <= 0) bad("size must be [m, n] with m, n > 0");
  const json& cj = j.contains("coeffs") ? j.at("coeffs") : json();
  if (!cj.is_array() || cj.empty()) bad("coeffs must be a non-empty list");
  const int grade = field<int>(j, "grade");
  if (grade < 0 || static_cast<size_t>(grade) + 1 != cj.size())
    throw Error(ErrorCode::DimensionMismatch, "grade does not match the number of coefficients");
  std::vector<Mat> coeffs;
  for (const auto& c : cj) coeffs.push_back(matrix_from(c, size[0], size[1]));
  BasisDescriptor basis;
  basis.kind = kind;
  if (j.contains("nodes")) basis.nodes = NodeSet(points_from(j.at("nodes")));
  if (j.contains("weights")) {
    if (!basis.nodes) bad("weights given without nodes");
    const std::vector<cplx> stored = points_from(j.at("weights"));
    const std::vector<cplx>& w = basis.nodes->weights();
    if (stored.size() != w.size()) bad("weights do not match the nodes");
    for (size_t i = 0; i < w.size(); ++i)
      if (std::abs(stored[i] - w[i]) > 1e-12 * std::max(1.0, std::abs(w[i])))
        bad("stored weights disagree with the nodes");
  }
  return MatrixPolynomial(basis, coeffs);
}

std::string pencil_to_json(const BlockPencil& L) {
  json j;
  j["type"] = "pencil";
  j["family"] = family_name(L.family);
  j["param"] = L.param;
  j["size"] = {L.L0.rows(), L.L0.cols()};
  j["row_blocks"] = L.row_blocks;
  j["col_blocks"] = L.col_blocks;
  j["body_rows"] = L.body_rows;
  j["body_cols"] = L.body_cols;
  j["L0"] = matrix_json(L.L0);
  j["L1"] = matrix_json(L.L1);
  return j.dump(2);
}

BlockPencil pencil_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) bad("pencil file must be a JSON object");
  BlockPencil L;
  const auto size = field<std::vector<long long>>(j, "size");
  if (size.size() != 2 || size[0] < 0 || size[1] < 0) bad("size must be [rows, cols]");
  if (!j.contains("L0") || !j.contains("L1")) bad("pencil needs L0 and L1");
  L.L0 = matrix_from(j.at("L0"), size[0], size[1]);
  L.L1 = matrix_from(j.at("L1"), size[0], size[1]);
  L.family = j.contains("family") ? family_from_name(field<std::string>(j, "family")) : Family::Generic;
  L.param = j.contains("param") ? field<int>(j, "param") : 0;
  if (j.contains("row_blocks")) {
    L.row_blocks = blocks_from(j, "row_blocks");
    L.col_blocks = blocks_from(j, "col_blocks");
    L.body_rows = field<int>(j, "body_rows");
    L.body_cols = field<int>(j, "body_cols");
  } else {
    L.row_blocks = {static_cast<Index>(size[0])};
    L.col_blocks = {static_cast<Index>(size[1])};
    L.body_rows = L.body_cols = 1;
  }
  L.validate();
  return L;
}

std::string matrix_to_json(const Mat& a) { return matrix_json(a).dump(2); }

Mat matrix_from_json(const std::string& text) {
  const json j = parse(text);
  if (j.is_object()) {
    if (!j.contains("matrix")) bad("matrix file needs a 'matrix' field");
    return matrix_from(j.at("matrix"));
  }
  return matrix_from(j);
}

NodeSet nodes_from_json(const std::string& text) {
  const json j = parse(text);
  if (j.is_object()) {
    if (!j.contains("nodes")) bad("node file needs a 'nodes' field");
    return NodeSet(points_from(j.at("nodes")));
  }
  return NodeSet(points_from(j));
}

std::string solution_to_json(const EigenSolution& sol) {
  json out = json::array();
  for (const EigenPair& p : sol.pairs) {
    json e;
    e["lambda"] = p.lambda.infinite ? json("inf") : complex_json(p.lambda.value);
    e["right"] = vector_json(p.right);
    e["left"] = p.left ? vector_json(*p.left) : json(nullptr);
    e["residual"] = number(p.residual_right);
    e["residual_left"] = p.residual_left ? number(*p.residual_left) : json(nullptr);
    e["recovered_from"] = p.recovered_from;
    e["condition"] = number(p.condition);
    out.push_back(e);
  }
  return out.dump(2);
}

std::string basis_to_json(const PolyVectorBasis& basis) {
  json j;
  j["side"] = basis.side == Side::Right ? "right" : "left";
  j["certificate"] =
      basis.certificate == PolyVectorBasis::Certificate::Deterministic ? "deterministic" : "probabilistic";
  j["degrees"] = basis.degrees;
  json vecs = json::array();
  for (const PolyMatrix& v : basis.vectors) {
    json coeffs = json::array();
    for (const Mat& c : v.coeffs()) coeffs.push_back(vector_json(c.col(0)));
    vecs.push_back(coeffs);
  }
  j["vectors"] = vecs;
  j["warnings"] = basis.warnings;
  return j.dump(2);
}

std::string report_to_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const VerifyCheck& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["measured"] = number(c.measured);
    e["threshold"] = number(c.threshold);
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  json j;
  j["pass"] = rep.all_pass();
  j["checks"] = checks;
  return j.dump(2);
}

std::string error_to_json(ErrorCode code, const std::string& message) {
  json j;
  j["error"] = error_code_name(code);
  j["message"] = message;
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::Io, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot move output into place at " + path);
  }
}

}  // namespace bmbp
