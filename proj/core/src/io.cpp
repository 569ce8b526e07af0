#include "copgeo/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "copgeo/error.hpp"
#include "report_json.hpp"

namespace copgeo {
namespace {

using Json = nlohmann::json;

// DOM builder that keeps floating-point literals as their source text so
// they can be converted to exact rationals.
class ExactNumberBuilder : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  using Base::Base;

  bool number_float(double, const std::string& lexeme) {
    std::string copy = lexeme;
    return Base::string(copy);
  }
};

Json parse_json(std::string_view text) {
  Json root;
  ExactNumberBuilder builder(root, true);
  try {
    Json::sax_parse(text, &builder);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return root;
}

Rational to_rational(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, where + ": " + e.detail());
    }
  }
  if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<std::uint64_t>())));
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<std::int64_t>())));
  throw Error(ErrorCode::ParseError, where + ": expected a number or rational string");
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::ParseError, where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::vector<std::vector<Rational>> rational_matrix(const Json& rows, const std::string& name) {
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "\"" + name + "\" must be an array of rows");
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array())
      throw Error(ErrorCode::ParseError, name + " row " + std::to_string(i + 1) + " must be an array");
    auto& row = out.emplace_back();
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      row.push_back(to_rational(rows[i][j], name + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
  }
  return out;
}

GridCopula grid_from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<double>> values;
  for (const auto& row : rows) {
    auto& out = values.emplace_back();
    for (const auto& v : row) out.push_back(v.get_d());
  }
  return GridCopula::from_rows(values);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IntervalExchange parse_shuffle_spec(std::string_view json) {
  const Json root = parse_json(json);
  const Json& pieces = member(root, "pieces", "shuffle spec");
  if (!pieces.is_array() || pieces.empty())
    throw Error(ErrorCode::ParseError, "\"pieces\" must be a non-empty array");
  std::vector<ExchangePiece> exact;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string where = "piece " + std::to_string(k + 1);
    const Json& src = member(pieces[k], "src", where);
    if (!src.is_array() || src.size() != 2) throw Error(ErrorCode::ParseError, where + ": \"src\" must be [start, end]");
    ExchangePiece p;
    p.start = to_rational(src[0], where + " src start");
    p.end = to_rational(src[1], where + " src end");
    p.target = to_rational(member(pieces[k], "dst", where), where + " dst");
    p.orientation = 1;
    if (pieces[k].contains("orient")) {
      const Json& o = pieces[k].at("orient");
      if (!o.is_number_integer() || (o.get<int>() != 1 && o.get<int>() != -1))
        throw Error(ErrorCode::ParseError, where + ": \"orient\" must be 1 or -1");
      p.orientation = o.get<int>();
    }
    exact.push_back(std::move(p));
  }
  try {
    return IntervalExchange(exact);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidIntervalExchange) throw;
    std::vector<RealPiece> approx;
    for (const auto& p : exact) approx.push_back({p.start.get_d(), p.end.get_d(), p.target.get_d(), p.orientation});
    try {
      return IntervalExchange::from_real(approx);
    } catch (const Error&) {
      throw e;
    }
  }
}

IntervalExchange load_shuffle_spec(const std::filesystem::path& path) { return parse_shuffle_spec(read_text_file(path)); }

std::string shuffle_spec_json(const IntervalExchange& h, int indent) {
  nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
  for (const auto& p : h.pieces()) {
    nlohmann::ordered_json j;
    j["src"] = {to_string(p.start), to_string(p.end)};
    j["dst"] = to_string(p.target);
    j["orient"] = p.orientation;
    pieces.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["pieces"] = std::move(pieces);
  return root.dump(indent);
}

GridCopula parse_grid_json(std::string_view json) {
  const Json root = parse_json(json);
  const Json& n = member(root, "n", "grid spec");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 0)
    throw Error(ErrorCode::ParseError, "\"n\" must be a non-negative integer");
  const auto rows = rational_matrix(member(root, "mass", "grid spec"), "mass");
  const auto k = static_cast<std::size_t>(n.get<std::int64_t>());
  if (k == 0) throw Error(ErrorCode::ResolutionZero, "grid resolution must be at least 1");
  if (rows.size() != k)
    throw Error(ErrorCode::InvalidGrid, "\"n\" is " + std::to_string(k) + " but \"mass\" has " +
                                            std::to_string(rows.size()) + " rows");
  return grid_from_rows(rows);
}

GridCopula parse_grid_csv(std::string_view csv) {
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    auto& row = rows.emplace_back();
    std::size_t col = 0;
    while (true) {
      const auto comma = line.find(',');
      ++col;
      try {
        row.push_back(parse_rational(line.substr(0, comma)));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError,
                    "row " + std::to_string(line_no) + ", column " + std::to_string(col) + ": " + e.detail());
      }
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
  }
  if (rows.empty()) throw Error(ErrorCode::ResolutionZero, "grid file has no rows");
  return grid_from_rows(rows);
}

GridCopula load_grid(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_grid_json(text);
  return parse_grid_csv(text);
}

TransformationMatrix parse_transformation_matrix(std::string_view json) {
  const Json root = parse_json(json);
  return TransformationMatrix(rational_matrix(member(root, "t", "transformation matrix"), "t"));
}

TransformationMatrix load_transformation_matrix(const std::filesystem::path& path) {
  return parse_transformation_matrix(read_text_file(path));
}

std::string profile_csv(const LengthProfile& profile) {
  std::string out = "t,L\n";
  for (std::size_t k = 0; k < profile.ts.size(); ++k)
    out += detail::shortest(profile.ts[k]) + "," + detail::shortest(profile.lengths[k]) + "\n";
  return out;
}

}  // namespace copgeo
