#pragma once

#include <map>
#include <string>

#include "mmtp/multimatroid.hpp"
#include "mmtp/poly.hpp"
#include "mmtp/transition.hpp"

namespace mmtp {

class DeltaMatroid;
class ArrowPresentation;

Multimatroid read_multimatroid(const std::string& path);
Multimatroid parse_multimatroid(const std::string& json_text);
std::string multimatroid_to_json(const Multimatroid& z);
void write_multimatroid(const Multimatroid& z, const std::string& path);

DeltaMatroid read_delta_matroid(const std::string& path);
DeltaMatroid parse_delta_matroid(const std::string& json_text);
std::string delta_matroid_to_json(const DeltaMatroid& d);
void write_delta_matroid(const DeltaMatroid& d, const std::string& path);

ArrowPresentation read_arrow_presentation(const std::string& path);
ArrowPresentation parse_arrow_presentation(const std::string& json_text);
std::string arrow_presentation_to_json(const ArrowPresentation& g);
void write_arrow_presentation(const ArrowPresentation& g, const std::string& path);

WeightMap read_weight_map(const std::string& path);
WeightMap parse_weight_map(const std::string& json_text);

}  // namespace mmtp
