#include "oapt/scaffold_io.hpp"

#include <json.hpp>

#include "oapt/error.hpp"

namespace oapt {

namespace {

using nlohmann::json;

mpz_class integer(const json& j) {
  if (j.is_number_integer()) {
    mpz_class z;
    const std::string text = j.dump();
    mpz_set_str(z.get_mpz_t(), text.c_str(), 10);
    return z;
  }
  if (j.is_string()) {
    mpz_class z;
    const auto& text = j.get_ref<const std::string&>();
    if (text.empty() || mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0) {
      throw Error(ErrorCode::Parse, "not a decimal integer: \"" + text + "\"");
    }
    return z;
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

GaussianRational scalar(const json& q) {
  if (!q.is_array() || q.size() != 4) {
    throw Error(ErrorCode::Parse, "expected [re_num, re_den, im_num, im_den], got " + q.dump());
  }
  const mpz_class rd = integer(q[1]);
  const mpz_class id = integer(q[3]);
  if (rd == 0 || id == 0) throw Error(ErrorCode::Parse, "zero denominator in " + q.dump());
  return {mpq_class(integer(q[0]), rd), mpq_class(integer(q[2]), id)};
}

json integer_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return z.get_si();
  return z.get_str();
}

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t index(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw Error(ErrorCode::Parse, "expected a nonnegative index, got " + j.dump());
  }
  return j.get<std::size_t>();
}

}  // namespace

Scaffold parse_scaffold_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("scaffold is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "scaffold must be a JSON object");
  const auto& jn = field(doc, "n");
  const auto& jk = field(doc, "k");
  if (!jn.is_number_integer() || !jk.is_number_integer()) {
    throw Error(ErrorCode::Parse, "n and k must be integers");
  }
  const int n = jn.get<int>();
  const int k = jk.get<int>();
  if (n < 2 || n > 64) throw Error(ErrorCode::InvalidArgument, "n must lie in 2..64");

  std::vector<Subspace> subspaces;
  const auto& jsubs = field(doc, "subspaces");
  if (!jsubs.is_array()) throw Error(ErrorCode::Parse, "\"subspaces\" must be an array");
  for (const auto& jsub : jsubs) {
    if (!jsub.is_array()) throw Error(ErrorCode::Parse, "each subspace must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& jrow : jsub) {
      if (!jrow.is_array() || jrow.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::Parse, "each row must hold n quadruples");
      }
      Vector v;
      for (const auto& q : jrow) v.push_back(scalar(q));
      rows.push_back(std::move(v));
    }
    subspaces.emplace_back(static_cast<std::size_t>(n), rows);
  }

  std::vector<Scaffold::MapEntry> map;
  const auto& jmap = field(doc, "map");
  if (!jmap.is_array()) throw Error(ErrorCode::Parse, "\"map\" must be an array");
  for (const auto& e : jmap) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "map entries are [from, to]");
    map.emplace_back(index(e[0]), index(e[1]));
  }

  std::vector<std::vector<std::size_t>> apartments;
  if (doc.contains("apartments")) {
    const auto& japts = doc.at("apartments");
    if (!japts.is_array()) throw Error(ErrorCode::Parse, "\"apartments\" must be an array");
    for (const auto& japt : japts) {
      if (!japt.is_array()) throw Error(ErrorCode::Parse, "each apartment is an index array");
      std::vector<std::size_t> apt;
      for (const auto& i : japt) apt.push_back(index(i));
      apartments.push_back(std::move(apt));
    }
  }
  return Scaffold(n, k, std::move(subspaces), map, std::move(apartments));
}

std::string scaffold_to_json(const Scaffold& s) {
  json doc;
  doc["n"] = s.n();
  doc["k"] = s.k();
  doc["subspaces"] = json::array();
  for (const auto& sub : s.subspaces()) {
    json rows = json::array();
    for (const auto& row : sub.basis()) {
      json jrow = json::array();
      for (const auto& z : row) {
        const mpq_class re = z.re(), im = z.im();
        jrow.push_back({integer_json(re.get_num()), integer_json(re.get_den()),
                        integer_json(im.get_num()), integer_json(im.get_den())});
      }
      rows.push_back(std::move(jrow));
    }
    doc["subspaces"].push_back(std::move(rows));
  }
  doc["map"] = json::array();
  for (const auto& [from, to] : s.map_entries()) doc["map"].push_back({from, to});
  doc["apartments"] = s.apartments();
  return doc.dump() + "\n";
}

}  // namespace oapt
