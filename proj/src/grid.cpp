#include "semgrid/grid.hpp"

namespace semgrid {

SemanticGrid ProbabilisticGrid::argmax() const {
    SemanticGrid out(geom, timestamp);
    const std::size_t ps = plane_size();
    for (std::size_t i = 0; i < ps; ++i) {
        int best = 0;
        double best_v = values[i];
        for (int c = 1; c < features; ++c) {
            const double v = values[static_cast<std::size_t>(c) * ps + i];
            if (v > best_v) {
                best_v = v;
                best = c;
            }
        }
        out.cells[i] = static_cast<ClassId>(best);
    }
    return out;
}

}  // namespace semgrid
