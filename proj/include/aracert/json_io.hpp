// JSON readers/writers for every file format the CLI speaks: complexes,
// ideals, graft specs, cover lists, SV partitions, resolution dumps and
// certificates.

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "aracert/bounds.hpp"

namespace aracert {

using nlohmann::json;

json complex_to_json(const SimplicialComplex& dx);
SimplicialComplex complex_from_json(const json& j);

json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

/// Accepts either a complex file (facet ideal is taken) or an ideal file.
MonomialIdeal ideal_from_any_json(const json& j);

json covers_to_json(const CoverSummary& summary, const VertexTable& table);

json sv_to_json(const SvPartition& part);
/// When the file carries no "vertices", the ambient must be supplied.
SvPartition sv_from_json(const json& j,
                         const std::optional<VertexTable>& ambient = {});

GraftSpec graft_spec_from_json(const json& j, const SimplicialComplex& base);
json graft_spec_to_json(const GraftSpec& spec, const SimplicialComplex& base);

json resolution_to_json(const LyubeznikResolution& res);

json certificate_to_json(const AraCertificate& cert);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace aracert
