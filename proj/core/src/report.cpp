#include "sepr/report.hpp"

#include <iomanip>
#include <sstream>

namespace sepr {
namespace {

using Json = nlohmann::ordered_json;

constexpr SignClass::Kind kKinds[] = {SignClass::Kind::zero, SignClass::Kind::positive, SignClass::Kind::negative,
                                      SignClass::Kind::mixed, SignClass::Kind::unresolved};

Json subset_to_json(const IndexSet& subset) { return Json(subset.indices()); }

std::string conclusion_text(const std::optional<Sign>& s) {
  return s ? std::string(1, symbol(*s)) : std::string("unknown");
}

}  // namespace

Json point_to_json(const RationalPoint& point, const VariableTable& vars) {
  Json out = Json::object();
  for (const auto& [var, value] : point.values()) out[vars.name(var)] = to_string(value);
  return out;
}

Json sign_set_to_json(const SignSet& set) {
  Json out = Json::array();
  for (Sign s : set.elements()) out.push_back(std::string(1, symbol(s)));
  return out;
}

Json to_json(const VerificationReport& report) {
  Json doc;
  doc["matrix"] = {{"n", report.n},
                   {"variables", report.vars ? report.vars->names() : std::vector<std::string>{}}};
  doc["seed"] = report.seed;
  doc["budget"] = report.budget;
  doc["status"] = to_string(report.overall());

  Json claims = Json::array();
  for (const auto& c : report.claims) claims.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  doc["claims"] = std::move(claims);

  Json sepr = Json::array();
  Json certificates = Json::array();
  for (const auto& level : report.sepr) {
    Json counts = Json::object();
    for (auto kind : kKinds) counts[to_string(kind)] = level.counts.of(kind);
    sepr.push_back({{"k", level.k},
                    {"guaranteed", sign_set_to_json(level.guaranteed)},
                    {"method", to_string(level.method)},
                    {"class_counts", std::move(counts)}});
    if (!level.certificate) continue;
    const auto& cert = *level.certificate;
    Json decompositions = Json::array();
    for (const auto& d : cert.decompositions) {
      Json concluded = Json::object();
      for (auto c : kPivotCases) concluded[to_string(c)] = conclusion_text(d.conclusion(c));
      decompositions.push_back({{"subset", subset_to_json(d.minor_subset)},
                                {"minor", d.minor.to_string()},
                                {"q", d.quotient.to_string()},
                                {"r", d.remainder.to_string()},
                                {"scale", d.scale.get_str()},
                                {"concluded", std::move(concluded)}});
    }
    certificates.push_back({{"k", cert.k},
                            {"pivot", cert.pivot.to_string()},
                            {"guaranteed", sign_set_to_json(cert.guaranteed)},
                            {"decompositions", std::move(decompositions)}});
  }
  doc["sepr"] = std::move(sepr);
  doc["certificates"] = std::move(certificates);

  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json entry = {{"subset", subset_to_json(w.subset)},
                  {"minor", w.minor.to_string()},
                  {"class", to_string(w.sign_class.kind)}};
    const auto& vars = *report.vars;
    entry["positive"] = w.sign_class.positive_witness ? point_to_json(*w.sign_class.positive_witness, vars) : Json(nullptr);
    entry["negative"] = w.sign_class.negative_witness ? point_to_json(*w.sign_class.negative_witness, vars) : Json(nullptr);
    witnesses.push_back(std::move(entry));
  }
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "sepr verification of a " << report.n << "x" << report.n << " matrix (seed " << report.seed << ", budget "
      << report.budget << ")\n\n";
  out << std::left << std::setw(4) << "k" << std::setw(11) << "guaranteed" << std::setw(18) << "method" << std::right;
  for (auto kind : kKinds) out << std::setw(11) << to_string(kind);
  out << '\n';
  for (const auto& level : report.sepr) {
    out << std::left << std::setw(4) << level.k << std::setw(11) << level.guaranteed.to_string() << std::setw(18)
        << to_string(level.method) << std::right;
    for (auto kind : kKinds) out << std::setw(11) << level.counts.of(kind);
    out << '\n';
  }

  for (const auto& level : report.sepr) {
    if (!level.certificate) continue;
    const auto& cert = *level.certificate;
    out << "\ncertificate k=" << cert.k << " pivot D = " << cert.pivot.to_string() << '\n';
    for (const auto& d : cert.decompositions) {
      out << "  " << std::left << std::setw(26) << d.minor_subset.to_string() << std::right;
      for (auto c : kPivotCases) out << ' ' << to_string(c) << ':' << conclusion_text(d.conclusion(c));
      out << "\n    q = " << d.quotient.to_string() << "\n    r = " << d.remainder.to_string();
      if (d.scale != 1) out << "\n    scale = " << d.scale.get_str();
      out << '\n';
    }
  }

  if (!report.witnesses.empty()) {
    out << "\norder-9 minors\n";
    for (const auto& w : report.witnesses) {
      out << "  " << std::left << std::setw(26) << w.subset.to_string() << std::right << to_string(w.sign_class.kind) << '\n';
      if (w.sign_class.positive_witness) out << "    + at " << w.sign_class.positive_witness->to_string(*report.vars) << '\n';
      if (w.sign_class.negative_witness) out << "    - at " << w.sign_class.negative_witness->to_string(*report.vars) << '\n';
    }
  }

  out << '\n';
  for (const auto& c : report.claims) out << "claim " << c.name << ": " << to_string(c.status) << " (" << c.details << ")\n";
  out << "overall: " << to_string(report.overall()) << '\n';
  return out.str();
}

}  // namespace sepr
