#pragma once

#include <string>

#include "artin/coxeter.hpp"
#include "artin/folding.hpp"
#include "artin/harness.hpp"
#include "artin/normal_form.hpp"
#include "artin/surface.hpp"

namespace artin {

// Graph spec: {"type":"A"|"D"|"I2"|"custom", "rank":n, "label":m (I2),
// "edges":[[s,t,m],...] (custom, label 0 = no relation)}.
CoxeterGraph parse_graph_spec_json(const std::string& json_text);
std::string graph_spec_json(const CoxeterGraph& g);

// Curve graph spec: {"type":"A"|"D","rank":n} for the two catalog shapes,
// or {"type":"custom","rank":v,"edges":[[a,b],...]} with unit crossings.
CurveGraph parse_curve_spec_json(const std::string& json_text);
std::string curve_spec_json(const CurveGraph& cg);

// Reads the argument either as inline JSON (leading '{') or as a path to
// a JSON file.
std::string load_spec_text(const std::string& arg);

std::string to_json_string(const VerdictTable& t);
std::string to_json_string(const FoldingReport& r);
std::string to_json_string(const FoldCheck& r);
std::string to_json_string(const ConjectureReport& r);
std::string to_json_string(const ClaimsReport& r);
std::string to_json_string(const CorollaryReport& r);
std::string surface_json(const CurveGraph& cg, const SurfaceType& st);
std::string normal_form_json(const PositiveWord& w, const NormalForm& nf);

}  // namespace artin
