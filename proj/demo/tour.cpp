// Copyright 2026 The triqubit Authors
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


// A short tour: classify the canonical states, show that GHZ and psi are
// related by a local unitary yet behave differently under measurement, and
// factor a product state.

#include <iostream>

#include "triqubit/triqubit.hpp"

using namespace triqubit;

static TripartiteState<Exact> state(const char *expr) {
    return std::get<TripartiteState<Exact>>(parse_state(expr));
}

int main() {
    std::cout << "Classification lists [|Det|; Cx0, Cx1, Cy0, Cy1, Cz0, Cz1], rescaled:\n";
    for (const auto &row : reproduce_table()) {
        std::cout << "  " << row.reference.name << "\t" << format_row(row.display.values) << "\n";
    }

    auto ghz = state("(|000> + |111>)/sqrt(2)");
    auto u = ghz_psi_unitary();
    auto psi = apply_local_3(ghz, u, u, u);
    std::cout << "\nU(x)U(x)U applied to GHZ: " << render(psi) << "\n";
    std::cout << "  |Det|^2 before " << classify(ghz).det_abs2 << ", after " << classify(psi).det_abs2 << "\n";

    std::cout << "\nMeasuring qubit 1:\n";
    for (Outcome o : kOutcomes) {
        auto a = collapse(ghz, Axis::X, o);
        auto b = collapse(psi, Axis::X, o);
        std::cout << "  outcome " << bit(o) << ": GHZ p=" << a.probability << " C=" << a.post_concurrence()
                  << ";  psi p=" << b.probability << " C=" << b.post_concurrence() << "\n";
    }

    auto product = state("|000> + i|001> - |010> - i|011> + 2|100> + 2i|101> - 2|110> - 2i|111>");
    auto f = extract_factors(product);
    std::cout << "\nProduct state factors: x=" << f.fx[0] << f.fx[1] << " y=" << f.fy[0] << f.fy[1]
              << " z=" << f.fz[0] << f.fz[1] << " (residual " << factor_residual(product, f) << ")\n";
    return 0;
}
