#include "zariski/commands.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace zariski {

namespace fs = std::filesystem;

namespace {

struct Job {
  std::string input;
  std::string type;  // canonical, empty when unparseable
  std::string parse_error;
};

void write_atomically(const fs::path& target, const std::string& text) {
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json totals_of(const ReportDocument& doc) {
  return Json{{"total_components", doc.payload.at("total_components")},
              {"real_components", doc.payload.at("real_components")}};
}

}  // namespace

std::vector<std::string> read_census_lines(const fs::path& input) {
  std::ifstream in(input);
  if (!in) throw CommandError(kExitUsage, "cannot open census input " + input.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

CensusResult cmd_census(const CensusOptions& options, const std::vector<std::string>& invocation) {
  const auto lines = read_census_lines(options.input);
  std::error_code ec;
  fs::create_directories(options.out, ec);
  if (ec) throw CommandError(kExitUsage, "cannot create output directory " + options.out.string());

  // dedupe aliases by canonical type, keep first-seen order
  std::vector<Job> jobs;
  std::map<std::string, std::size_t> seen;
  for (const auto& line : lines) {
    Job job{line, {}, {}};
    try {
      job.type = DynkinType::parse(line).to_string();
    } catch (const std::invalid_argument& e) {
      job.parse_error = e.what();
    }
    if (!job.type.empty()) {
      if (seen.count(job.type)) continue;
      seen.emplace(job.type, jobs.size());
    }
    jobs.push_back(std::move(job));
  }

  std::vector<Json> entries(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      Json entry{{"input", job.input}, {"type", job.type.empty() ? job.input : job.type}};
      if (!job.parse_error.empty()) {
        entry["status"] = "failed";
        entry["error"] = "cannot parse Dynkin type: " + job.parse_error;
        entries[i] = std::move(entry);
        continue;
      }
      const fs::path target = options.out / (job.type + ".json");
      try {
        if (options.resume && fs::exists(target)) {
          entry["status"] = "skipped";
          entry.update(totals_of(parse_report(slurp(target))));
        } else {
          const ReportDocument doc = cmd_components(job.type, {"zariski", "components", job.type});
          write_atomically(target, render_json(doc));
          entry["status"] = "ok";
          entry.update(totals_of(doc));
        }
        entry["file"] = target.filename().string();
      } catch (const std::exception& e) {
        entry["status"] = "failed";
        entry["error"] = e.what();
      }
      entries[i] = std::move(entry);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t failures = 0;
  for (const auto& e : entries)
    if (e["status"] == "failed") ++failures;
  CensusResult result;
  result.summary = ReportDocument{kSchemaVersion, invocation, "census",
                                  Json{{"input", options.input.string()},
                                       {"out", options.out.string()},
                                       {"entries", entries},
                                       {"failures", failures}}};
  result.exit_code = failures == 0 ? kExitOk : kExitPartialCensus;
  return result;
}

}  // namespace zariski
