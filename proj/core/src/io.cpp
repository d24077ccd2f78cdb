#include "maxcut/io.hpp"

#include <fstream>
#include <sstream>

namespace maxcut {

std::string readTextFile(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace maxcut
