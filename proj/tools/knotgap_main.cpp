#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotgap/bounds.hpp"
#include "knotgap/dagger.hpp"
#include "knotgap/surface.hpp"

namespace {

using knotgap::Int;
using knotgap::Rat;
using json = nlohmann::ordered_json;

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Nonempty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> pd_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

knotgap::Mat parse_matrix_file(const std::string& path) {
  std::string text = read_file(path);
  size_t a = text.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) throw UserError(path + ": empty matrix file");
  std::vector<std::vector<long long>> rows;
  if (text[a] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UserError(path + ": " + e.what());
    }
    if (!j.is_array()) throw UserError(path + ": expected an array of rows");
    for (const auto& row : j) {
      if (!row.is_array())
        throw UserError(path + ": expected an array of rows");
      rows.emplace_back();
      for (const auto& v : row) {
        if (!v.is_number_integer())
          throw UserError(path + ": matrix entries must be integers");
        rows.back().push_back(v.get<long long>());
      }
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      std::istringstream ls(line);
      std::vector<long long> row;
      long long v;
      while (ls >> v) row.push_back(v);
      if (!ls.eof()) throw UserError(path + ": matrix entries must be integers");
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw UserError(path + ": empty matrix file");
  for (const auto& row : rows)
    if (row.size() != rows[0].size())
      throw UserError(path + ": ragged rows");
  return knotgap::Mat(rows);
}

std::string render(const knotgap::GenusReport& r, const std::string& format) {
  if (format == "json") return knotgap::report_json(r) + "\n";
  return knotgap::report_text(r);
}

std::string rat_str(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

struct BatchRow {
  bool ok = false;
  std::string name;
  int genus = 0;
  Rat stable_upper;
  bool theorem1 = false;
  std::string output;
};

BatchRow run_one(const std::string& line, int line_no,
                 const knotgap::AnalyzeOptions& opt,
                 const std::string& format) {
  BatchRow row;
  try {
    knotgap::Diagram d = knotgap::parse_pd(line);
    knotgap::GenusReport r = knotgap::analyze(d, opt);
    row.ok = true;
    row.name = r.name;
    row.genus = r.genus;
    row.stable_upper = r.stable_t_upper;
    row.theorem1 = r.theorem1.applicable;
    row.output = render(r, format);
  } catch (const knotgap::InternalError&) {
    throw;
  } catch (const knotgap::VerificationFailed&) {
    throw;
  } catch (const knotgap::KnotgapError& e) {
    row.ok = false;
    row.name = "line " + std::to_string(line_no);
    if (format == "json") {
      json j;
      j["line"] = line_no;
      j["error"] = e.what();
      row.output = j.dump() + "\n";
    } else {
      row.output = "line " + std::to_string(line_no) + ": " + e.what() + "\n";
    }
  }
  return row;
}

int cmd_analyze(const std::string& input, const std::string& matrix_path,
                const knotgap::AnalyzeOptions& opt,
                const std::string& format) {
  if (!matrix_path.empty()) {
    knotgap::Mat v = parse_matrix_file(matrix_path);
    knotgap::GenusReport r = knotgap::analyze_matrix(
        v, opt.assume_genus_minimal, opt.height_bound);
    std::cout << render(r, format);
    return 0;
  }
  if (input.empty()) throw UserError("analyze needs a PD file or --matrix");
  auto lines = pd_lines(read_file(input));
  if (lines.empty()) throw UserError(input + ": no PD codes found");
  for (auto& [no, line] : lines) {
    try {
      knotgap::Diagram d = knotgap::parse_pd(line);
      knotgap::GenusReport r = knotgap::analyze(d, opt);
      std::cout << render(r, format);
      if (format == "text") std::cout << "\n";
    } catch (const knotgap::InternalError&) {
      throw;
    } catch (const knotgap::VerificationFailed&) {
      throw;
    } catch (const knotgap::KnotgapError& e) {
      throw UserError(input + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return 0;
}

int cmd_batch(const std::string& input, const knotgap::AnalyzeOptions& opt,
              const std::string& format, int jobs) {
  auto lines = pd_lines(read_file(input));
  std::vector<BatchRow> rows(lines.size());
  std::atomic<size_t> next{0};
  std::vector<std::string> worker_errors;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      try {
        rows[i] = run_one(lines[i].second, lines[i].first, opt, format);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mu);
        worker_errors.push_back(e.what());
        return;
      }
    }
  };
  int nworkers = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < nworkers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (!worker_errors.empty())
    throw knotgap::InternalError(worker_errors.front());

  int failed = 0, thm1 = 0;
  for (auto& row : rows) {
    std::cout << row.output;
    if (!row.ok) ++failed;
    if (row.theorem1) ++thm1;
  }
  std::cout << "== batch summary ==\n";
  std::cout << "knots:               " << rows.size() << "\n";
  std::cout << "analyzed:            " << rows.size() - failed << "\n";
  std::cout << "failed:              " << failed << "\n";
  std::cout << "theorem1 applicable: " << thm1 << "\n";
  std::cout << "name  g  stable_gt_upper  gap\n";
  for (auto& row : rows) {
    if (!row.ok) {
      std::cout << row.name << "  -  -  - (failed)\n";
      continue;
    }
    Rat gap = Rat(row.genus) - row.stable_upper;
    std::cout << row.name << "  " << row.genus << "  "
              << rat_str(row.stable_upper) << "  " << rat_str(gap) << "\n";
  }
  return failed > 0 ? 2 : 0;
}

int cmd_dagger(long long p, long long n, const std::string& format) {
  knotgap::DaggerSolution s = knotgap::solve_dagger(p, n);
  if (format == "json") {
    json j;
    j["p"] = s.p;
    j["n"] = s.n;
    j["x1"] = s.x1.str();
    j["y1"] = s.y1.str();
    j["x2"] = s.x2.str();
    j["y2"] = s.y2.str();
    j["verified"] = s.verified;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "p = " << s.p << ", n = " << s.n << ": (x1,y1,x2,y2) = ("
              << s.x1 << "," << s.y1 << "," << s.x2 << "," << s.y2
              << "), verified = " << (s.verified ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_certify(const std::string& m_str, const std::string& format) {
  Int m;
  try {
    m = Int(m_str);
  } catch (const std::exception&) {
    throw UserError("not an integer: " + m_str);
  }
  knotgap::IsotropyCertificate c = knotgap::certify_isotropy(m);
  if (format == "json") {
    json j;
    j["m"] = c.m.str();
    j["verdict"] = c.isotropic ? "isotropic" : "anisotropic";
    if (c.isotropic) {
      j["witness"] = {c.w1.str(), c.w2.str(), c.w3.str(), c.w4.str()};
    } else {
      j["q"] = c.q.str();
      j["e"] = c.e;
    }
    std::cout << j.dump() << "\n";
  } else if (c.isotropic) {
    std::cout << "isotropic: x1^2 + x2^2 = " << c.m
              << " (y1^2 + y2^2) has the solution (" << c.w1 << "," << c.w2
              << "," << c.w3 << "," << c.w4 << ")\n";
  } else {
    std::cout << "anisotropic(" << c.q << "," << c.e << "): the prime "
              << c.q << " = 3 (mod 4) divides " << c.m
              << " to the odd power " << c.e
              << ", so only zero solves x1^2 + x2^2 = " << c.m
              << " (y1^2 + y2^2)\n";
  }
  return 0;
}

int cmd_surface_dump(const std::string& input, int outer_face) {
  auto lines = pd_lines(read_file(input));
  if (lines.empty()) throw UserError(input + ": no PD codes found");
  for (auto& [no, line] : lines) {
    try {
      knotgap::Diagram d = knotgap::parse_pd(line);
      knotgap::Surface s = knotgap::build_surface(d, outer_face);
      std::cout << knotgap::surface_dump(s);
    } catch (const knotgap::InternalError&) {
      throw;
    } catch (const knotgap::KnotgapError& e) {
      throw UserError(input + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus bounds for knots from planar diagram codes"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  knotgap::AnalyzeOptions opt;
  std::string input, matrix_path;
  int jobs = 1;
  long long dag_p = 0, dag_n = 0;
  std::string cert_m;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze PD codes");
  analyze->add_option("input", input, "PD file, one knot per line");
  analyze->add_option("--matrix", matrix_path, "Seifert matrix file");
  add_format(analyze);
  analyze->add_option("--height-bound", opt.height_bound,
                      "max-norm bound for class searches")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--outer-face", opt.outer_face, "outer face override");
  analyze->add_flag("--assume-genus-minimal", opt.assume_genus_minimal,
                    "trust the diagram surface to realize the knot genus");

  CLI::App* batch = app.add_subcommand("batch", "analyze a whole file");
  batch->add_option("input", input, "PD file, one knot per line")->required();
  add_format(batch);
  batch->add_option("--height-bound", opt.height_bound,
                    "max-norm bound for class searches")
      ->check(CLI::PositiveNumber);
  batch->add_flag("--assume-genus-minimal", opt.assume_genus_minimal,
                  "trust the diagram surface to realize the knot genus");
  batch->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* dagger = app.add_subcommand("dagger", "solve the clasp identity");
  dagger->add_option("p", dag_p, "positive framing")->required();
  dagger->add_option("n", dag_n, "negative framing (as a positive number)")
      ->required();
  add_format(dagger);

  CLI::App* certify =
      app.add_subcommand("certify-isotropy", "x1^2 + x2^2 = m (y1^2 + y2^2)");
  certify->add_option("m", cert_m, "right-hand factor")->required();
  add_format(certify);

  CLI::App* dump = app.add_subcommand("surface-dump", "debug surface layout");
  dump->add_option("input", input, "PD file")->required();
  dump->add_option("--outer-face", opt.outer_face, "outer face override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(input, matrix_path, opt, format);
    if (app.got_subcommand(batch)) return cmd_batch(input, opt, format, jobs);
    if (app.got_subcommand(dagger)) return cmd_dagger(dag_p, dag_n, format);
    if (app.got_subcommand(certify)) return cmd_certify(cert_m, format);
    if (app.got_subcommand(dump))
      return cmd_surface_dump(input, opt.outer_face);
  } catch (const knotgap::InternalError& e) {
    std::cerr << "knotgap: " << e.what() << "\n";
    return 1;
  } catch (const knotgap::VerificationFailed& e) {
    std::cerr << "knotgap: " << e.what() << "\n";
    return 1;
  } catch (const knotgap::KnotgapError& e) {
    std::cerr << "knotgap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "knotgap: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
