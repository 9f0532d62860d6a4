// isocount: exact counts of rational elliptic curves with a cyclic N-isogeny,
// ordered by naive height, with growth-rate fitting.
//
// Subcommands: census | param | stack | quadric5 | summatory | fit | table1 |
//              plot | registry
//
// Examples:
//   isocount census --n 2 --x 1e6 --out c.csv
//   isocount census --n 2 --x 1e6 --threads 8 --checkpoint run.ckpt --resume
//   isocount param --n 3,4,6,8,9 --x-grid 1e3,1e4,1e5,1e6 --out p.csv
//   isocount table1 --xmax 1e6
//   isocount fit --in c.csv
//   isocount plot --in c.csv --out c.svg

#include "isocount/cli.hpp"

int main(int argc, char** argv) {
  return isocount::cli::run_command(argc, argv);
}
