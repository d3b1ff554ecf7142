#pragma once

#include <string>

#include "digitop/oracle.hpp"

namespace digitop::io {

// Canonical JSON forms. Emission sorts points lexicographically and map
// pairs by domain point, so parse(emit(x)) == x and emit(parse(s)) == s on
// canonical input.
std::string to_json(const DigitalImage& image);
std::string to_json(const DigitalMap& map);

// A map file with an embedded verification certificate, as written by the
// cover commands.
std::string cover_to_json(const DigitalMap& cover, const CoverCertificate& cert,
                          int factor_domain, int factor_codomain);

DigitalImage image_from_json(const std::string& text);
DigitalMap map_from_json(const std::string& text);

DigitalImage read_image(const std::string& path);
DigitalMap read_map(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace digitop::io
