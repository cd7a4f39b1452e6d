#include "csb/report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace csb {

using nlohmann::json;

json step_to_json(const StepCdf& f) {
  return json{{"y", f.points()}, {"value", f.cumprobs()}, {"proper", f.is_proper()}};
}

json interval_to_json(const Interval& iv) {
  return json{{"lo", iv.lo},
              {"hi", iv.hi},
              {"tag", iv.tag == IntervalTag::Sharp ? "sharp" : "outerset"}};
}

json crossings_to_json(const CrossingReport& r) {
  json list = json::array();
  for (const auto& v : r.violations) {
    list.push_back({{"y", v.y}, {"lb", v.lb}, {"ub", v.ub}});
  }
  return json{{"violations", list}, {"max_gap", r.max_gap}};
}

json support_to_json(const SupportReport& r) {
  return json{{"checked", r.checked},
              {"holds", r.holds},
              {"tolerance", r.tolerance},
              {"missing_points", r.missing_points},
              {"period1", r.period1}};
}

json bounds_to_json(const BoundsPair& b) {
  return json{{"eval", b.eval_support},
              {"raw_lb", b.raw_lb},
              {"raw_ub", b.raw_ub},
              {"lb", step_to_json(b.lb)},
              {"ub", step_to_json(b.ub)},
              {"crossings", crossings_to_json(b.crossings)},
              {"support_condition", support_to_json(b.support)}};
}

json distdid_to_json(const DistDidEstimate& d) {
  json vlist = json::array();
  for (const auto& v : d.violations) {
    const char* kind = v.kind == DistDidViolationKind::Decrease
                           ? "decrease"
                           : (v.kind == DistDidViolationKind::BelowZero ? "below_zero"
                                                                        : "above_one");
    vlist.push_back({{"kind", kind},
                     {"from_y", v.from_y},
                     {"to_y", v.to_y},
                     {"magnitude", v.magnitude}});
  }
  return json{{"eval", d.eval},
              {"raw", d.raw},
              {"rearranged", step_to_json(d.rearranged)},
              {"violations", vlist}};
}

json decomposition_to_json(const GiniDecomposition& d) {
  return json{{"att", interval_to_json(d.att)},
              {"swtt", interval_to_json(d.swtt)},
              {"mean_component", interval_to_json(d.mean_component)},
              {"inequality_component", interval_to_json(d.inequality_component)}};
}

json make_metadata(const std::string& command,
                   const std::map<std::string, std::string>& flags) {
  return json{{"command", command}, {"version", kVersion}, {"flags", flags}};
}

void write_step_csv(const StepCdf& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << "y,value\n";
  out.precision(17);
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << f.points()[i] << ',' << f.cumprobs()[i] << '\n';
  }
}

void write_document(const json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump(2) << std::endl;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  out << doc.dump(2) << '\n';
}

}  // namespace csb
