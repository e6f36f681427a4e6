#include "metaca/image.hpp"

#include <ostream>
#include <stdexcept>

namespace metaca {

image::image(int width, int height, rgb fill) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

void image::write_ppm(std::ostream& out) const {
    out << "P6\n" << width_ << ' ' << height_ << "\n255\n";
    for (const rgb& px : pixels_) {
        const char bytes[3] = {static_cast<char>(px.r), static_cast<char>(px.g),
                               static_cast<char>(px.b)};
        out.write(bytes, 3);
    }
}

} // namespace metaca
