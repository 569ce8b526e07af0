#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "copgeo/interval_exchange.hpp"

namespace copgeo {

enum class ImageFormat { Svg, Pgm };

/// "svg" or "pgm"; anything else throws UnsupportedFormat.
ImageFormat parse_image_format(std::string_view text);
std::string_view extension(ImageFormat format);

inline constexpr std::size_t kMinImageSize = 64;

/// Support segments of A_h in black over the Omega region in magenta.
///
/// SVG: a size x size canvas with y pointing up, polygon vertices taken from
/// omega_region. PGM (P5, maxval 255): white background, black support, the
/// region filled with gray 160 wherever a pixel centre lies in a polygon
/// (left and bottom edges inclusive). The fill is painted last so its pixel
/// count measures the region area.
///
/// Output is a pure function of the arguments. Throws OutOfRange when
/// size < kMinImageSize.
std::string render_support_and_omega(const IntervalExchange& h, ImageFormat format, std::size_t size);

inline constexpr unsigned char kPgmBackground = 255;
inline constexpr unsigned char kPgmSupport = 0;
inline constexpr unsigned char kPgmFill = 160;

}  // namespace copgeo
