#include "isocount/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isocount/analytic.hpp"
#include "isocount/families.hpp"
#include "isocount/isogeny.hpp"

namespace isocount::cli {

namespace {

constexpr const char* kCkptHeader = "isogeny-census-ckpt v1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

counting::u64 parse_x(const std::string& s) {
  // accepts plain integers and 1e6-style scientific notation
  try {
    if (s.find_first_of("eE.") != std::string::npos) {
      double d = std::stod(s);
      if (!(d >= 1.0) || d > 9.2e18 || d != std::floor(d))
        throw UsageError("malformed height bound: " + s);
      return static_cast<counting::u64>(d);
    }
    return std::stoull(s);
  } catch (const UsageError&) {
    throw;
  } catch (...) {
    throw UsageError("malformed height bound: " + s);
  }
}

std::vector<counting::u64> parse_grid(const std::string& s) {
  std::vector<counting::u64> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_x(tok));
  }
  if (out.empty()) throw UsageError("malformed grid: " + s);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw UsageError("grid must be strictly increasing");
  return out;
}

}  // namespace

void write_csv(const std::vector<counting::CensusResult>& rows, const std::string& path) {
  if (rows.empty()) throw UsageError("write_csv: no rows");
  std::vector<counting::CensusResult> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const counting::CensusResult& a, const counting::CensusResult& b) {
                     return a.N != b.N ? a.N < b.N : a.X < b.X;
                   });
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << "N,X,count,engine\n";
  for (auto& r : sorted)
    os << r.N << ',' << r.X << ',' << r.count << ',' << r.engine << '\n';
  if (!os) throw IoError("write failed: " + path);
}

std::vector<counting::CensusResult> read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty csv: " + path);
  std::vector<counting::CensusResult> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string n, x, cnt, eng;
    if (!std::getline(ss, n, ',') || !std::getline(ss, x, ',') ||
        !std::getline(ss, cnt, ',') || !std::getline(ss, eng))
      throw IoError("malformed csv row: " + line);
    counting::CensusResult r;
    r.N = static_cast<unsigned>(std::stoul(n));
    r.X = std::stoull(x);
    r.count = std::stoull(cnt);
    r.engine = eng;
    rows.push_back(std::move(r));
  }
  return rows;
}

void save_checkpoint(const Checkpoint& c, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << kCkptHeader << '\n';
  for (auto& [id, cnt, done] : c.parts)
    os << c.engine << ' ' << c.N << ' ' << c.X << ' ' << id << ' ' << cnt << ' '
       << (done ? 1 : 0) << '\n';
  if (!os) throw IoError("write failed: " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(is, line) || line != kCkptHeader)
    throw UsageError("checkpoint version mismatch (want '" + std::string(kCkptHeader) +
                     "'); refusing to resume");
  Checkpoint c;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string engine;
    unsigned N, id;
    counting::u64 X, cnt;
    int done;
    if (!(ss >> engine >> N >> X >> id >> cnt >> done))
      throw UsageError("corrupt checkpoint line: " + line);
    if (c.parts.empty()) {
      c.engine = engine;
      c.N = N;
      c.X = X;
    } else if (engine != c.engine || N != c.N || X != c.X) {
      throw UsageError("checkpoint mixes runs; refusing to resume");
    }
    c.parts.emplace_back(id, cnt, done != 0);
  }
  if (c.parts.empty()) throw UsageError("checkpoint has no partitions");
  return c;
}

void render_plot(const std::vector<counting::CensusResult>& rows, const std::string& path) {
  // group series by (N, engine); need >= 2 points in some series
  std::map<std::pair<unsigned, std::string>, std::vector<std::pair<double, double>>> series;
  for (auto& r : rows)
    if (r.count > 0 && r.X > 1)
      series[{r.N, r.engine}].emplace_back(std::log10((double)r.X), std::log10((double)r.count));
  for (auto it = series.begin(); it != series.end();) {
    std::sort(it->second.begin(), it->second.end());
    if (it->second.size() < 2) it = series.erase(it);
    else ++it;
  }
  if (series.empty()) throw UsageError("render_plot: need >= 2 points in some series");
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (auto& [k, pts] : series)
    for (auto& [x, y] : pts) {
      x0 = std::min(x0, x); x1 = std::max(x1, x);
      y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
  if (x1 - x0 < 1e-9) x1 = x0 + 1;
  if (y1 - y0 < 1e-9) y1 = y0 + 1;
  const int W = 640, H = 480, ML = 56, MB = 40, MT = 16, MR = 150;
  auto px = [&](double x) { return ML + (x - x0) / (x1 - x0) * (W - ML - MR); };
  auto py = [&](double y) { return H - MB - (y - y0) / (y1 - y0) * (H - MB - MT); };
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                 "#bcbd22", "#17becf"};
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
     << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << ML << "' y1='" << H - MB << "' x2='" << W - MR << "' y2='"
     << H - MB << "' stroke='black'/>\n";
  os << "<line x1='" << ML << "' y1='" << H - MB << "' x2='" << ML << "' y2='" << MT
     << "' stroke='black'/>\n";
  os << "<text x='" << (W - MR + ML) / 2 << "' y='" << H - 8
     << "' font-size='12'>log10 X</text>\n";
  os << "<text x='12' y='" << (H - MB + MT) / 2
     << "' font-size='12' transform='rotate(-90 12 " << (H - MB + MT) / 2
     << ")'>log10 count</text>\n";
  int ci = 0, li = 0;
  for (auto& [key, pts] : series) {
    const char* col = colors[ci++ % 10];
    os << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='";
    for (auto& [x, y] : pts) os << px(x) << ',' << py(y) << ' ';
    os << "'/>\n";
    os << "<text x='" << W - MR + 8 << "' y='" << MT + 14 + 16 * li++
       << "' font-size='12' fill='" << col << "'>N=" << key.first << ' ' << key.second
       << "</text>\n";
  }
  os << "</svg>\n";
  if (!os) throw IoError("write failed: " + path);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("malformed config line: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

namespace {

struct Args {
  std::string cmd;
  std::map<std::string, std::string> flags;
};

Args parse_args(const std::vector<std::string>& argv) {
  if (argv.empty()) throw UsageError("missing subcommand");
  Args a;
  a.cmd = argv[0];
  for (std::size_t i = 1; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    if (s.rfind("--", 0) != 0) throw UsageError("unexpected argument: " + s);
    std::string key = s.substr(2);
    std::string val = "1";
    auto eq = key.find('=');
    if (eq != std::string::npos) {
      val = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else if (key != "resume" && key != "desk" && i + 1 < argv.size()) {
      val = argv[++i];
    } else if (key != "resume" && key != "desk") {
      throw UsageError("flag needs a value: " + s);
    }
    a.flags[key] = val;
  }
  // config file values fill gaps (flags override)
  auto cfg = a.flags.find("config");
  if (cfg != a.flags.end()) {
    for (auto& [k, v] : read_config_file(cfg->second))
      a.flags.emplace(k, v);  // does not overwrite existing flags
  }
  return a;
}

std::vector<unsigned> parse_levels(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(static_cast<unsigned>(std::stoul(tok)));
  if (out.empty()) throw UsageError("malformed level list: " + s);
  return out;
}

int run_parsed(const Args& a) {
  using counting::CensusResult;
  using counting::u64;
  auto flag = [&](const std::string& k) -> const std::string* {
    auto it = a.flags.find(k);
    return it == a.flags.end() ? nullptr : &it->second;
  };
  unsigned threads = flag("threads") ? static_cast<unsigned>(std::stoul(*flag("threads"))) : 1;
  unsigned partitions =
      flag("partitions") ? static_cast<unsigned>(std::stoul(*flag("partitions"))) : 16;
  if (threads < 1 || partitions < 1) throw UsageError("threads/partitions must be >= 1");

  auto emit = [&](std::vector<CensusResult> rows) {
    if (const std::string* out = flag("out")) write_csv(rows, *out);
    else
      for (auto& r : rows)
        std::cout << r.N << ',' << r.X << ',' << r.count << ',' << r.engine << '\n';
  };

  auto grid_of = [&]() -> std::vector<u64> {
    if (const std::string* g = flag("x-grid")) return parse_grid(*g);
    if (const std::string* x = flag("x")) return {parse_x(*x)};
    throw UsageError("need --x or --x-grid");
  };

  if (a.cmd == "census") {
    if (!flag("n")) throw UsageError("census: need --n");
    auto levels = parse_levels(*flag("n"));
    for (unsigned N : levels)
      if (!isogeny::level_supported(N))
        throw std::domain_error("unsupported level " + std::to_string(N));
    std::vector<CensusResult> rows;
    for (unsigned N : levels) {
      for (u64 X : grid_of()) {
        const std::string* ck = flag("checkpoint");
        if (!ck) {
          rows.push_back(counting::census(N, X, threads, partitions));
          continue;
        }
        // checkpointed run (single N,X per checkpoint file)
        std::vector<std::pair<unsigned, u64>> done;
        bool fresh = true;
        if (flag("resume")) {
          Checkpoint c = load_checkpoint(*ck);
          if (c.engine != "census" || c.N != N || c.X != X)
            throw UsageError("checkpoint does not match this run; refusing to resume");
          for (auto& [id, cnt, dn] : c.parts)
            if (dn) done.emplace_back(id, cnt);
          fresh = false;
        }
        std::ofstream ck_os(*ck, fresh ? std::ios::binary
                                       : (std::ios::binary | std::ios::app));
        if (!ck_os) throw IoError("cannot open checkpoint: " + *ck);
        if (fresh) ck_os << kCkptHeader << '\n';
        std::vector<std::pair<unsigned, u64>> already = done;
        auto on_part = [&](unsigned id, u64 cnt) {
          for (auto& [did, dc] : already)
            if (did == id) return;  // already recorded
          ck_os << "census " << N << ' ' << X << ' ' << id << ' ' << cnt << " 1\n";
          ck_os.flush();
        };
        rows.push_back(counting::census(N, X, threads, partitions,
                                        done.empty() ? nullptr : &done, on_part));
      }
    }
    emit(std::move(rows));
    return 0;
  }
  if (a.cmd == "param") {
    if (!flag("n")) throw UsageError("param: need --n");
    std::vector<CensusResult> rows;
    for (unsigned N : parse_levels(*flag("n")))
      for (u64 X : grid_of()) rows.push_back(counting::param_count(N, X, threads));
    emit(std::move(rows));
    return 0;
  }
  if (a.cmd == "stack") {
    if (!flag("n")) throw UsageError("stack: need --n");
    std::vector<CensusResult> rows;
    for (unsigned N : parse_levels(*flag("n")))
      for (u64 X : grid_of()) {
        if (N == 2 || N == 4) rows.push_back(counting::stack_count_pairs(N, X));
        else if (N == 3 || N == 6 || N == 8 || N == 9)
          rows.push_back(counting::stack_count_triples(N, X));
        else if (N == 5) rows.push_back(counting::count_quadric5(X));
        else throw std::domain_error("stack: unsupported level " + std::to_string(N));
      }
    emit(std::move(rows));
    return 0;
  }
  if (a.cmd == "quadric5") {
    std::vector<CensusResult> rows;
    for (u64 X : grid_of()) rows.push_back(counting::count_quadric5(X));
    emit(std::move(rows));
    return 0;
  }
  if (a.cmd == "summatory") {
    if (!flag("t")) throw UsageError("summatory: need --t");
    u64 T = parse_x(*flag("t"));
    u64 s = analytic::summatory_b4(T);
    double ratio = static_cast<double>(s) /
                   (static_cast<double>(T) * std::log((double)T) * std::log((double)T));
    if (const std::string* out = flag("out")) {
      std::ofstream os(*out, std::ios::binary);
      if (!os) throw IoError("cannot open for writing: " + *out);
      os << "T,sum,ratio\n" << T << ',' << s << ',' << ratio << '\n';
    } else {
      std::cout << "T=" << T << " sum=" << s << " sum/(T log^2 T)=" << ratio << '\n';
    }
    return 0;
  }
  if (a.cmd == "fit") {
    if (!flag("in")) throw UsageError("fit: need --in");
    auto rows = read_csv(*flag("in"));
    std::map<std::pair<unsigned, std::string>, std::vector<std::pair<double, double>>> series;
    for (auto& r : rows)
      series[{r.N, r.engine}].emplace_back((double)r.X, (double)r.count);
    static const int betas[] = {0, 1, 2};
    bool any = false;
    for (auto& [key, pts] : series) {
      if (pts.size() < 4)
        throw UsageError("fit: need >= 4 samples for N=" + std::to_string(key.first));
      std::sort(pts.begin(), pts.end());
      auto f = analytic::fit_growth(pts, betas);
      std::cout << "N=" << key.first << " engine=" << key.second << " alpha=" << f.alpha
                << " beta=" << f.beta << " c=" << f.c << " residual=" << f.residual << '\n';
      any = true;
    }
    if (!any) throw UsageError("fit: no series in input");
    return 0;
  }
  if (a.cmd == "table1") {
    u64 xmax = flag("xmax") ? parse_x(*flag("xmax")) : 1'000'000;
    std::vector<unsigned> levels =
        flag("n") ? parse_levels(*flag("n"))
                  : std::vector<unsigned>(isogeny::kSupportedLevels.begin(),
                                          isogeny::kSupportedLevels.end());
    std::vector<u64> grid;
    for (u64 X = 1000; X <= xmax; X *= 10) grid.push_back(X);
    if (grid.size() < 4) throw UsageError("table1: xmax must allow >= 4 grid points");
    static const int betas[] = {0, 1, 2};
    std::vector<CensusResult> rows;
    std::cout << "N,alpha,beta,c\n";
    for (unsigned N : levels) {
      std::vector<std::pair<double, double>> pts;
      for (u64 X : grid) {
        auto r = counting::census(N, X, threads, partitions);
        rows.push_back(r);
        if (r.count > 0) pts.emplace_back((double)X, (double)r.count);
      }
      if (pts.size() >= 4) {
        auto f = analytic::fit_growth(pts, betas);
        std::cout << N << ',' << f.alpha << ',' << f.beta << ',' << f.c << '\n';
      } else {
        std::cout << N << ",,,(too few nonzero counts)\n";
      }
    }
    if (const std::string* out = flag("out")) write_csv(rows, *out);
    return 0;
  }
  if (a.cmd == "plot") {
    if (!flag("in") || !flag("out")) throw UsageError("plot: need --in and --out");
    render_plot(read_csv(*flag("in")), *flag("out"));
    return 0;
  }
  if (a.cmd == "registry") {
    if (const std::string* out = flag("out")) {
      std::ofstream os(*out, std::ios::binary);
      if (!os) throw IoError("cannot open for writing: " + *out);
      families::dump_registry(os);
    } else {
      families::dump_registry(std::cout);
    }
    return 0;
  }
  throw UsageError("unknown subcommand: " + a.cmd);
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  try {
    return run_parsed(parse_args(args));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args);
}

}  // namespace isocount::cli
