#include "maxcut/contraction.hpp"

#include <ostream>
#include <sstream>

namespace maxcut {

void writeTrace(std::ostream &os, const ContractionTrace &trace) {
    os << "step i j weight_at_pick sign removed survivor\n";
    std::size_t k = 1;
    for (const auto &s : trace.steps) {
        os << k++ << ' ' << s.i + 1 << ' ' << s.j + 1 << ' ' << s.weightAtPick.toString() << ' '
           << (s.sign > 0 ? "+1" : "-1") << ' ' << s.removed + 1 << ' ' << s.survivor + 1 << '\n';
    }
}

std::string formatTrace(const ContractionTrace &trace) {
    std::ostringstream os;
    writeTrace(os, trace);
    return os.str();
}

} // namespace maxcut
