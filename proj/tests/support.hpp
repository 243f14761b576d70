#pragma once

#include "oneone/io.hpp"

#include <string>

#ifndef ONEONE_FIXTURE_DIR
#error "ONEONE_FIXTURE_DIR must be defined by the build"
#endif

inline std::string fixture(const std::string& name) { return std::string(ONEONE_FIXTURE_DIR) + "/" + name; }

inline oneone::Diagram load(const std::string& name) { return oneone::read_diagram_file(fixture(name)); }

inline oneone::Rational q(const char* text) { return oneone::parse_rational(text); }
inline oneone::ProjectiveSlope slope(const char* text) { return oneone::ProjectiveSlope::parse(text); }
