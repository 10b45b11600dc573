// Copyright 2026 The setshapes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Library walk-through: partition a handful of points, draw the partition
// and print its measures.
//
//   sample_pipeline > drawing.svg

#include <iostream>
#include <vector>

#include "setshapes/setshapes.hpp"

int main() {
  using namespace setshapes;

  // Two categories: a row of "a" points and a small "b" cluster on top of it.
  Dataset ds = parse_tsv(
      "0\t0\ta\n3\t0.4\ta\n6\t0\ta\n9\t0.6\ta\n"
      "4.5\t1.2\tb\n5\t4\tb\n3.5\t5\tb\n6\t5.5\tb\n",
      "sample");

  PartitionConfig cfg;
  cfg.rd = 1.0;
  const Filtration f = run_simulation(ds.points, cfg);
  for (const Merge& m : f.merges)
    std::cerr << "t=" << m.time << ": " << m.source1 << " + " << m.source2 << " -> "
              << kind_name(f.patterns[m.target].kind) << ' ' << m.target << '\n';

  const Drawing d = draw_at(f, default_time(cfg.rd));
  std::cout << render_svg(d, default_style(static_cast<int>(ds.labels.size()), cfg.rd));
  std::cerr << csv_header() << '\n' << csv_row(measure(d)) << '\n';
  return 0;
}
