#include "chtilde/certifier.hpp"

#include <json.hpp>

#include <stdexcept>

namespace chtilde {

using Json = nlohmann::ordered_json;

std::int64_t positivity_center(int n, int i, int j) {
  validate_coeff_index(n, i, j);
  const std::int64_t base = witness_center(n, 0);
  if (j == 0) return i == 0 ? base : base - 1;
  return i == 0 ? base - 1 : base - 2;
}

PositivityCertificate certify_positivity(RecurrenceEngine& engine, int n, int i, int j) {
  validate_coeff_index(n, i, j);
  const ChElement folded = fold_L(engine.raw(n, i, j));
  PositivityCertificate cert;
  cert.n = n;
  cert.i = i;
  cert.j = j;
  cert.center = positivity_center(n, i, j);
  cert.coefficients.assign(folded.coeffs().begin(), folded.coeffs().end());
  cert.all_nonnegative = folded.all_nonnegative();
  cert.max_index = folded.max_index();
  cert.mass = folded.mass();
  return cert;
}

ConeCertificate certify_cone(RecurrenceEngine& engine, int n, int j) {
  validate_coeff_index(n, 0, j);
  const IntegerMultiset witness =
      j == 0 ? engine.e0_closed(n).multiset : engine.e1_closed(n).multiset;
  ConeCertificate cert;
  cert.n = n;
  cert.j = j;
  cert.center = witness_center(n, j);
  cert.decomposition = decompose_cone(witness, cert.center);
  cert.recomposition_ok = recompose(cert.decomposition) == witness;
  return cert;
}

namespace {

template <class Pairs>
bool strictly_increasing_positive(const Pairs& pairs) {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (sgn(pairs[k].second) <= 0) return false;
    if (k > 0 && pairs[k - 1].first >= pairs[k].first) return false;
  }
  return true;
}

}  // namespace

bool is_valid(const PositivityCertificate& cert) {
  try {
    if (cert.center != positivity_center(cert.n, cert.i, cert.j)) return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  BigInt mass = 0;
  bool nonnegative = true;
  for (std::size_t k = 0; k < cert.coefficients.size(); ++k) {
    const auto& [index, c] = cert.coefficients[k];
    if (index < 0 || c == 0) return false;
    if (k > 0 && cert.coefficients[k - 1].first >= index) return false;
    if (sgn(c) < 0) nonnegative = false;
    mass += c;
  }
  const std::optional<std::int64_t> max_index =
      cert.coefficients.empty() ? std::nullopt
                                : std::optional<std::int64_t>(cert.coefficients.back().first);
  return cert.all_nonnegative && nonnegative && max_index == cert.max_index && mass == cert.mass;
}

bool is_valid(const ConeCertificate& cert) {
  const ConeDecomposition& d = cert.decomposition;
  try {
    if (cert.center != witness_center(cert.n, cert.j)) return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (d.center != cert.center || !cert.recomposition_ok) return false;
  if (!strictly_increasing_positive(d.singletons) || !strictly_increasing_positive(d.radii)) {
    return false;
  }
  if (!d.singletons.empty() && d.singletons.front().first < d.center) return false;
  if (!d.radii.empty() && d.radii.front().first < 1) return false;
  return true;
}

bool positivity_follows(const ConeCertificate& cone, const PositivityCertificate& pos) {
  if (cone.n != pos.n || cone.j != pos.j || pos.i != 0) return false;
  if (cone.center < 0 || !cone.recomposition_ok) return true;  // premise not met
  const IntegerMultiset m = recompose(cone.decomposition);
  // mult(i) >= mult(-i-2) for i >= 0 is positivity of the fold.
  if (!m.empty()) {
    for (std::int64_t i = 0; i <= std::max<std::int64_t>(m.max(), -m.min()); ++i) {
      if (m.mult(i) < m.mult(-i - 2)) return false;
    }
  }
  const ChElement folded = fold_L(to_tilde(m));
  const std::vector<std::pair<std::int64_t, BigInt>> expected(folded.coeffs().begin(),
                                                             folded.coeffs().end());
  return pos.all_nonnegative && expected == pos.coefficients;
}

namespace {

template <class Pairs>
Json pairs_to_json(const Pairs& pairs) {
  Json out = Json::array();
  for (const auto& [index, value] : pairs) out.push_back(Json::array({index, to_decimal(value)}));
  return out;
}

std::vector<std::pair<std::int64_t, BigInt>> pairs_from_json(const Json& j) {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (const Json& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string()) {
      throw std::invalid_argument("certificate: expected [index, \"decimal\"] pair");
    }
    out.emplace_back(entry[0].get<std::int64_t>(), parse_decimal(entry[1].get<std::string>()));
  }
  return out;
}

Json positivity_json(const PositivityCertificate& cert) {
  Json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["kind"] = "positivity";
  j["n"] = cert.n;
  j["i"] = cert.i;
  j["j"] = cert.j;
  j["center"] = cert.center;
  j["coefficients"] = pairs_to_json(cert.coefficients);
  j["all_nonnegative"] = cert.all_nonnegative;
  j["max_index"] = cert.max_index ? Json(*cert.max_index) : Json(nullptr);
  j["mass"] = to_decimal(cert.mass);
  return j;
}

Json cone_json(const ConeCertificate& cert) {
  Json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["kind"] = "cone";
  j["n"] = cert.n;
  j["j"] = cert.j;
  j["center"] = cert.center;
  Json d;
  d["center"] = cert.decomposition.center;
  d["singletons"] = pairs_to_json(cert.decomposition.singletons);
  d["radii"] = pairs_to_json(cert.decomposition.radii);
  j["decomposition"] = std::move(d);
  j["recomposition_ok"] = cert.recomposition_ok;
  return j;
}

Json parse_document(std::string_view text, std::string_view kind) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw std::invalid_argument("certificate: not a JSON object");
  if (j.value("schema_version", -1) != kCertificateSchemaVersion) {
    throw std::invalid_argument("certificate: unsupported schema_version");
  }
  if (j.value("kind", std::string{}) != kind) throw std::invalid_argument("certificate: wrong kind");
  return j;
}

}  // namespace

std::string to_json(const PositivityCertificate& cert) { return positivity_json(cert).dump(); }

std::string to_json(const ConeCertificate& cert) { return cone_json(cert).dump(); }

PositivityCertificate positivity_from_json(std::string_view text) {
  const Json j = parse_document(text, "positivity");
  try {
    PositivityCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.i = j.at("i").get<int>();
    cert.j = j.at("j").get<int>();
    cert.center = j.at("center").get<std::int64_t>();
    cert.coefficients = pairs_from_json(j.at("coefficients"));
    cert.all_nonnegative = j.at("all_nonnegative").get<bool>();
    if (!j.at("max_index").is_null()) cert.max_index = j.at("max_index").get<std::int64_t>();
    cert.mass = parse_decimal(j.at("mass").get<std::string>());
    return cert;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
}

ConeCertificate cone_from_json(std::string_view text) {
  const Json j = parse_document(text, "cone");
  try {
    ConeCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.j = j.at("j").get<int>();
    cert.center = j.at("center").get<std::int64_t>();
    const Json& d = j.at("decomposition");
    cert.decomposition.center = d.at("center").get<std::int64_t>();
    cert.decomposition.singletons = pairs_from_json(d.at("singletons"));
    cert.decomposition.radii = pairs_from_json(d.at("radii"));
    cert.recomposition_ok = j.at("recomposition_ok").get<bool>();
    return cert;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
}

bool CertificateSet::all_valid() const {
  if (!implication_failures.empty()) return false;
  for (const auto& c : positivity) {
    if (!is_valid(c)) return false;
  }
  for (const auto& c : cone) {
    if (!is_valid(c)) return false;
  }
  return true;
}

CertificateSet certify_all(RecurrenceEngine& engine, int n_max) {
  validate_coeff_index(n_max, 0, 0);
  CertificateSet set;
  for (int n = 0; n <= n_max; ++n) {
    for (int j : {0, 1}) {
      std::optional<PositivityCertificate> zero;
      for (int i : {-1, 0, 1}) {
        set.positivity.push_back(certify_positivity(engine, n, i, j));
        if (i == 0) zero = set.positivity.back();
      }
      set.cone.push_back(certify_cone(engine, n, j));
      if (!positivity_follows(set.cone.back(), *zero)) set.implication_failures.emplace_back(n, j);
    }
  }
  return set;
}

std::string to_json(const CertificateSet& set) {
  Json j;
  j["schema_version"] = kCertificateSchemaVersion;
  Json pos = Json::array();
  for (const auto& c : set.positivity) pos.push_back(positivity_json(c));
  Json cone = Json::array();
  for (const auto& c : set.cone) cone.push_back(cone_json(c));
  j["positivity"] = std::move(pos);
  j["cone"] = std::move(cone);
  return j.dump(2);
}

}  // namespace chtilde
