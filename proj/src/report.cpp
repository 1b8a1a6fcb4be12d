#include "invarr/report.hpp"

#include <sstream>
#include <stdexcept>

namespace invarr {

using nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

namespace {

ordered_json poly_json(const std::optional<QPolynomial>& p) {
  if (!p) return nullptr;
  auto c = p->coefficients();
  return ordered_json(std::vector<std::uint64_t>(c.begin(), c.end()));
}

template <typename Range>
std::string spaced(const Range& values) {
  std::string out = "\"";
  bool first = true;
  for (auto v : values) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "\"";
}

std::string poly_csv(const std::optional<QPolynomial>& p) { return p ? spaced(p->coefficients()) : std::string(); }

}  // namespace

ordered_json record_to_json(const StatRecord& r) {
  ordered_json j;
  j["w"] = r.w.values();
  j["inv"] = r.inv;
  j["code"] = r.code.entries;
  j["prod"] = r.prod;
  j["wk"] = r.wk;
  j["br"] = r.br;
  j["ao"] = r.ao;
  j["rk"] = r.rk;
  j["re"] = r.re ? ordered_json(*r.re) : ordered_json(nullptr);
  j["avoids_231_312"] = r.avoids_231_312;
  j["avoids_four"] = r.avoids_four;
  j["avoids_3412_4231"] = r.avoids_3412_4231;
  j["weak_poly"] = poly_json(r.weak_poly);
  j["bruhat_poly"] = poly_json(r.bruhat_poly);
  j["product_poly"] = poly_json(r.product_poly);
  j["distance_poly"] = poly_json(r.distance_poly);
  return j;
}

std::string csv_header() {
  return "w,inv,code,prod,wk,br,ao,rk,re,avoids_231_312,avoids_four,avoids_3412_4231,"
         "weak_poly,bruhat_poly,product_poly,distance_poly\n";
}

std::string record_to_csv(const StatRecord& r) {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream s;
  s << spaced(r.w.values()) << ',' << r.inv << ',' << spaced(r.code.entries) << ',' << r.prod << ',' << r.wk << ','
    << r.br << ',' << r.ao << ',' << r.rk << ',' << (r.re ? std::to_string(*r.re) : std::string()) << ','
    << flag(r.avoids_231_312) << ',' << flag(r.avoids_four) << ',' << flag(r.avoids_3412_4231) << ','
    << poly_csv(r.weak_poly) << ',' << poly_csv(r.bruhat_poly) << ',' << poly_csv(r.product_poly) << ','
    << poly_csv(r.distance_poly) << '\n';
  return s.str();
}

std::string emit_report(const SweepReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = csv_header();
    for (const auto& r : report.records) out += record_to_csv(r);
    return out;
  }
  ordered_json j;
  j["n"] = report.n;
  j["depth"] = std::string(to_string(report.depth));
  j["records"] = ordered_json::array();
  for (const auto& r : report.records) j["records"].push_back(record_to_json(r));
  j["violations"] = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json item;
    item["w"] = v.record.w.values();
    item["check"] = v.check;
    item["details"] = v.details;
    item["record"] = record_to_json(v.record);
    j["violations"].push_back(std::move(item));
  }
  j["class_counts"] = ordered_json::object();
  for (const auto& [name, count] : report.class_counts) j["class_counts"][name] = count;
  return j.dump(2) + "\n";
}

std::string record_to_text(const StatRecord& r) {
  const auto poly = [](const std::optional<QPolynomial>& p) { return p ? p->to_string() : std::string("-"); };
  std::ostringstream s;
  s << "w=" << r.w.to_string() << '\n';
  s << "inv=" << r.inv << " code=(";
  for (int i = 1; i <= r.code.size(); ++i) s << (i > 1 ? "," : "") << r.code[i];
  s << ")\n";
  s << "wk=" << r.wk << " prod=" << r.prod << " rk=" << r.rk << " ao=" << r.ao << " br=" << r.br;
  s << " re=" << (r.re ? std::to_string(*r.re) : std::string("-")) << '\n';
  s << "avoids {231,312}: " << (r.avoids_231_312 ? "yes" : "no")
    << "  avoids {4231,35142,42513,351624}: " << (r.avoids_four ? "yes" : "no")
    << "  avoids {3412,4231}: " << (r.avoids_3412_4231 ? "yes" : "no") << '\n';
  s << "weak:     " << poly(r.weak_poly) << '\n';
  s << "bruhat:   " << poly(r.bruhat_poly) << '\n';
  s << "product:  " << poly(r.product_poly) << '\n';
  s << "distance: " << poly(r.distance_poly) << '\n';
  return s.str();
}

}  // namespace invarr
