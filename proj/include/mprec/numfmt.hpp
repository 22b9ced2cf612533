// numfmt.hpp - shortest round-trippable decimal printing

#pragma once

#include <string>

namespace mprec {

std::string format_number(double v);

}  // namespace mprec
