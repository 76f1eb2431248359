#include <chrono>
#include <iostream>
#include <string>

#include "vis/generators.hpp"
#include "vis/visibility.hpp"

using namespace vis;
using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    std::vector<int> sizes{100, 200, 400};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::stoi(argv[i]));
    }
    std::cout << "visibility-graph kernel, serial vs OpenMP\n";
    std::cout << "n\tserial_ms\tparallel_ms\tspeedup\tidentical\n";
    for (int n : sizes) {
        int side = 1;
        while (side * side < n) ++side;
        auto A = gen_grid(side, (n + side - 1) / side);

        auto t0 = clk::now();
        auto Gs = visibility_graph_serial(A);
        double serial = ms_since(t0);

        t0 = clk::now();
        auto Gp = visibility_graph(A);
        double parallel = ms_since(t0);

        bool same = Gs.witnesses() == Gp.witnesses();
        for (int i = 0; same && i < Gs.size(); ++i)
            for (int j = 0; j < Gs.size(); ++j)
                if (Gs.adjacent(i, j) != Gp.adjacent(i, j)) same = false;

        std::cout << A.size() << "\t" << serial << "\t" << parallel << "\t"
                  << (parallel > 0 ? serial / parallel : 0.0) << "\t"
                  << (same ? "yes" : "NO") << "\n";
        if (!same) return 1;
    }
    return 0;
}
