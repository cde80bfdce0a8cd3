#include "kummer/errors.hpp"

#include <utility>

namespace kummer {

PoleError::PoleError(long nearest, std::string what)
    : Error(std::move(what)), nearest_(nearest) {}

}  // namespace kummer
