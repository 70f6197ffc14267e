#include "fibsum/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace fibsum {

namespace {

using nlohmann::json;

std::string range_str(const IntRange& range) {
  return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

std::string tuple_str(const ParamTuple& p) {
  return "(n=" + std::to_string(p.n) + ",r=" + std::to_string(p.r) + ",s=" + std::to_string(p.s) +
         ",t=" + std::to_string(p.t) + ")";
}

json failure_to_json(const Failure& f) {
  json j;
  j["tuple"] = {{"n", f.tuple.n}, {"r", f.tuple.r}, {"s", f.tuple.s}, {"t", f.tuple.t}};
  j["lhs"] = f.lhs.str();
  if (f.mid) j["mid"] = f.mid->str();
  j["rhs"] = f.rhs.str();
  return j;
}

json report_to_json(const VerificationReport& rep) {
  json j;
  j["identity_id"] = rep.identity_id;
  j["grid"] = {{"n", range_str(rep.grid.n)},
               {"r", range_str(rep.grid.r)},
               {"s", range_str(rep.grid.s)},
               {"t", range_str(rep.grid.t)}};
  if (rep.seed) j["seed"] = *rep.seed;
  j["tuples_tested"] = rep.tuples_tested;
  j["tuples_skipped"] = rep.tuples_skipped;
  j["failures"] = json::array();
  for (const auto& f : rep.failures) j["failures"].push_back(failure_to_json(f));
  return j;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& rep : reports) arr.push_back(report_to_json(rep));
  return arr.dump(2) + "\n";
}

std::string failure_cell(const Failure& f) {
  std::string cell = tuple_str(f.tuple) + " lhs=" + f.lhs.str();
  if (f.mid) cell += " mid=" + f.mid->str();
  cell += " rhs=" + f.rhs.str();
  return cell;
}

std::string render_tsv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "identity_id\tn\tr\ts\tt\tseed\ttuples_tested\ttuples_skipped\tfailures\n";
  for (const auto& rep : reports) {
    out << rep.identity_id << '\t' << range_str(rep.grid.n) << '\t' << range_str(rep.grid.r)
        << '\t' << range_str(rep.grid.s) << '\t' << range_str(rep.grid.t) << '\t';
    out << (rep.seed ? std::to_string(*rep.seed) : "-");
    out << '\t' << rep.tuples_tested << '\t' << rep.tuples_skipped << '\t';
    if (rep.failures.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < rep.failures.size(); ++i) {
        if (i) out << "; ";
        out << failure_cell(rep.failures[i]);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render_human(const std::vector<VerificationReport>& reports) {
  std::size_t id_width = 12;
  for (const auto& rep : reports) id_width = std::max(id_width, rep.identity_id.size() + 2);

  std::ostringstream out;
  auto pad = [&out, id_width](const std::string& s) {
    out << s;
    for (std::size_t i = s.size(); i < id_width; ++i) out << ' ';
  };
  pad("identity");
  out << "tested  skipped  failures  wall_ms  minimal counterexample\n";
  std::uint64_t total_failures = 0;
  for (const auto& rep : reports) {
    total_failures += rep.failures.size();
    pad(rep.identity_id);
    std::string tested = std::to_string(rep.tuples_tested);
    std::string skipped = std::to_string(rep.tuples_skipped);
    std::string fails = std::to_string(rep.failures.size());
    std::string wall = std::to_string(rep.wall_time.count() / 1000);
    out << tested << std::string(tested.size() < 8 ? 8 - tested.size() : 1, ' ')
        << skipped << std::string(skipped.size() < 9 ? 9 - skipped.size() : 1, ' ')
        << fails << std::string(fails.size() < 10 ? 10 - fails.size() : 1, ' ')
        << wall << std::string(wall.size() < 9 ? 9 - wall.size() : 1, ' ');
    out << (rep.failures.empty() ? "-" : failure_cell(rep.failures.front()));
    out << '\n';
  }
  out << (total_failures == 0 ? "all reports clean\n"
                              : std::to_string(total_failures) + " failure(s) total\n");
  return out.str();
}

}  // namespace

std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::human: return render_human(reports);
    case ReportFormat::json: return render_json(reports);
    case ReportFormat::tsv: return render_tsv(reports);
  }
  return {};
}

int report_exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& rep : reports)
    if (!rep.clean()) return 1;
  return 0;
}

}  // namespace fibsum
