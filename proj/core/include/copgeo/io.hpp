#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "copgeo/grid_copula.hpp"
#include "copgeo/grid_measures.hpp"
#include "copgeo/interval_exchange.hpp"
#include "copgeo/self_similar.hpp"

namespace copgeo {

/// Whole file as bytes; throws ParseError when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// {"pieces":[{"src":[s,e],"dst":d,"orient":1|-1}, ...]}. Values may be JSON
/// numbers or strings holding integers, decimals or "p/q"; decimal literals
/// are read exactly ("0.1" is 1/10). When the exact values do not tile the
/// unit interval, the pieces are retried as binary64 within 1e-12 and the
/// result is flagged inexact. "orient" defaults to 1.
IntervalExchange parse_shuffle_spec(std::string_view json);
IntervalExchange load_shuffle_spec(const std::filesystem::path& path);

/// Inverse of parse_shuffle_spec, with "p/q" strings.
std::string shuffle_spec_json(const IntervalExchange& h, int indent = -1);

/// {"n":k,"mass":[[...], ...]} with k rows of k numbers or rational strings.
GridCopula parse_grid_json(std::string_view json);
/// k lines of k comma-separated masses.
GridCopula parse_grid_csv(std::string_view csv);
/// JSON when the first non-blank character is '{', CSV otherwise.
GridCopula load_grid(const std::filesystem::path& path);

/// {"t":[[...], ...]} with numbers or rational strings, read exactly.
TransformationMatrix parse_transformation_matrix(std::string_view json);
TransformationMatrix load_transformation_matrix(const std::filesystem::path& path);

/// "t,L" header then one row per level.
std::string profile_csv(const LengthProfile& profile);

}  // namespace copgeo
