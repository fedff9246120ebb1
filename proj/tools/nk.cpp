// nk: run Novikov job documents.

#include <novikit/document.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#ifndef NK_JOBS_DIR
#define NK_JOBS_DIR "jobs"
#endif

namespace fs = std::filesystem;

namespace {

struct Flags {
  std::optional<long> precision;
  std::string direction;
  std::string format = "text";
  bool oracle = false;
};

nk::RunOverrides overrides(const Flags& f) {
  nk::RunOverrides o;
  o.precision = f.precision;
  if (f.direction == "plus") o.direction = nk::Direction::Plus;
  if (f.direction == "minus") o.direction = nk::Direction::Minus;
  o.oracle = f.oracle;
  return o;
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nk::Report run_file(const std::string& path, const nk::RunOverrides& o) {
  auto text = slurp(path);
  if (!text) {
    nk::Report r;
    r.exit = nk::ExitCode::Error;
    r.data = nk::Json{{"source", path}, {"status", "error"}, {"error", {{"type", "IOError"}, {"message", "cannot read file"}}}};
    r.text = "== " + path + "\nerror: cannot read file\nstatus: error\n";
    return r;
  }
  return nk::run_text(*text, path, o);
}

// Jobs run concurrently; output keeps input order.
int run_files(const std::vector<std::string>& files, const Flags& f) {
  const nk::RunOverrides o = overrides(f);
  std::vector<std::future<nk::Report>> jobs;
  for (const auto& path : files) jobs.push_back(std::async(std::launch::async, run_file, path, o));
  int exit = 0;
  nk::Json all = nk::Json::array();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    nk::Report r = jobs[k].get();
    exit = std::max(exit, static_cast<int>(r.exit));
    if (f.format == "machine")
      all.push_back(std::move(r.data));
    else
      std::cout << (k ? "\n" : "") << r.text;
  }
  if (f.format == "machine") std::cout << (files.size() == 1 ? all[0] : all).dump(2) << "\n";
  return exit;
}

std::vector<std::string> list_jobs(const std::string& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Novikov homology, fundamental domains and fibering checks over exact rings"};
  app.require_subcommand(1);
  Flags flags;
  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--precision", flags.precision, "series precision K (absolute exponent bound)")->check(CLI::NonNegativeNumber);
    sub->add_option("--direction", flags.direction, "completion side")->check(CLI::IsMember({"plus", "minus"}));
    sub->add_option("--format", flags.format, "report format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--oracle", flags.oracle, "run redundant cross-checks");
  };

  std::vector<std::string> files;
  auto* run = app.add_subcommand("run", "run one or more job documents");
  run->add_option("files", files, "job documents")->required();
  add_run_flags(run);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "parse and validate a job document");
  validate->add_option("file", validate_file)->required();

  std::string dir = NK_JOBS_DIR;
  auto* examples = app.add_subcommand("examples", "bundled example jobs");
  examples->require_subcommand(1);
  examples->add_option("--dir", dir, "example directory");
  auto* list = examples->add_subcommand("list", "list the examples");
  auto* run_all = examples->add_subcommand("run-all", "run every example");
  add_run_flags(run_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) return run_files(files, flags);

  if (*validate) {
    auto text = slurp(validate_file);
    if (!text) {
      std::cerr << validate_file << ": cannot read file\n";
      return 2;
    }
    try {
      const nk::JobDocument doc = nk::parse_document(*text);
      std::cout << validate_file << ": valid " << nk::to_string(doc.kind) << " document\n";
      return 0;
    } catch (const nk::Error& e) {
      std::cerr << validate_file << ": " << e.what() << "\n";
      return 2;
    }
  }

  const auto jobs = list_jobs(dir);
  if (jobs.empty()) {
    std::cerr << "no .json jobs in " << dir << "\n";
    return 2;
  }
  if (*list) {
    for (const auto& j : jobs) {
      std::string kind = "?";
      if (auto text = slurp(j)) try {
          kind = nk::to_string(nk::parse_document(*text).kind);
        } catch (const nk::Error&) {
          kind = "invalid";
        }
      std::cout << fs::path(j).filename().string() << "  " << kind << "\n";
    }
    return 0;
  }
  (void)run_all;
  return run_files(jobs, flags);
}
