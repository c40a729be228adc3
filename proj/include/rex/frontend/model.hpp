#ifndef REX_FRONTEND_MODEL_HPP
#define REX_FRONTEND_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>

namespace rex {

/// Assignment of words to string variables and integers to integer variables.
struct Model {
    std::map<std::string, std::string> strings;
    std::map<std::string, std::int64_t> ints;

    friend bool operator==(const Model&, const Model&) = default;
};

} // namespace rex

#endif
