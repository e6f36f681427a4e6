#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace metaca {

struct rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(rgb, rgb) noexcept = default;
    friend constexpr auto operator<=>(rgb, rgb) noexcept = default;
};

inline constexpr rgb white{255, 255, 255};
inline constexpr rgb black{0, 0, 0};

class image {
public:
    image(int width, int height, rgb fill = white);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    rgb& at(int x, int y) noexcept { return pixels_[index(x, y)]; }
    rgb at(int x, int y) const noexcept { return pixels_[index(x, y)]; }

    const std::vector<rgb>& pixels() const noexcept { return pixels_; }

    // Binary PPM (P6), 8-bit channels.
    void write_ppm(std::ostream& out) const;

    friend bool operator==(const image&, const image&) = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<rgb> pixels_;
};

} // namespace metaca
