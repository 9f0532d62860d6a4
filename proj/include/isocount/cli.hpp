#pragma once
// Command-line surface: engine drivers, CSV export, checkpoints, SVG plots,
// growth-table reproduction.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 unsupported level.
// CSV: header `N,X,count,engine`, decimal integers, LF endings, rows sorted
// by (N, X).  Checkpoint: first line `isogeny-census-ckpt v1`, then
// `engine N X partition_id partial_count done` per line.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "isocount/counting.hpp"

namespace isocount::cli {

struct Config {
  std::vector<unsigned> n_list;
  std::vector<counting::u64> x_grid;
  unsigned threads = 1;
  unsigned partitions = 16;
  std::string out_path, in_path, checkpoint_path;
  bool resume = false;
  counting::u64 xmax = 0;
};

struct Checkpoint {
  std::string engine;
  unsigned N = 0;
  counting::u64 X = 0;
  std::vector<std::tuple<unsigned, counting::u64, bool>> parts;  // id, count, done
};

void write_csv(const std::vector<counting::CensusResult>& rows, const std::string& path);
std::vector<counting::CensusResult> read_csv(const std::string& path);

void save_checkpoint(const Checkpoint& c, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);  // throws on version mismatch

// static SVG, log-log axes, one polyline per (N, engine) series
void render_plot(const std::vector<counting::CensusResult>& rows, const std::string& path);

// flat key=value lines, UTF-8, '#' comments; values overridden by CLI flags
std::map<std::string, std::string> read_config_file(const std::string& path);

int run_command(const std::vector<std::string>& args);
int run_command(int argc, char** argv);

}  // namespace isocount::cli
