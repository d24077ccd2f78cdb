#pragma once

#include <filesystem>
#include <string>

#include "maxcut/error.hpp"

namespace maxcut {

class IoError : public Error {
public:
    using Error::Error;
};

std::string readTextFile(const std::filesystem::path &path);

} // namespace maxcut
