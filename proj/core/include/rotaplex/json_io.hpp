#ifndef ROTAPLEX_JSON_IO_HPP
#define ROTAPLEX_JSON_IO_HPP

#include <string>

#include "rotaplex/complex.hpp"
#include "rotaplex/polyhedron.hpp"

namespace rotaplex {

// Polyhedron JSON: {"name", "ambient_dim", "hrep": {"rows": [...]}, "vrep": {...}}.
std::string polyhedron_to_json(const Polyhedron& p, int indent = 2);
Polyhedron polyhedron_from_json(const std::string& text);

// Complex JSON: {"ambient_dim", "cells": [{"vertices", "rays", "label", "maximal"}]}.
std::string complex_to_json(const PolyhedralComplex& c, int indent = 2);
PolyhedralComplex complex_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rotaplex

#endif
