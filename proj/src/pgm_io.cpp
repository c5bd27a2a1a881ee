#include "ptopo/pgm_io.hpp"

#include <fstream>

#include "ptopo/error.hpp"

namespace ptopo {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
int next_header_int(std::istream& in, const char* what) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    int v = 0;
    if (!(in >> v)) throw InputError(std::string("pgm: missing ") + what);
    return v;
}

} // namespace

RasterGrid load_pgm(const std::string& path, RasterMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open PGM file: " + path);

    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5")
        throw InputError("pgm: expected magic P2 or P5, got '" + magic + "'");
    const int width = next_header_int(in, "width");
    const int height = next_header_int(in, "height");
    const int maxval = next_header_int(in, "maxval");
    if (width < 5 || height < 5) throw InputError("pgm: image must be at least 5x5");
    if (maxval <= 0 || maxval > 255) throw InputError("pgm: maxval must be in 1..255");

    Frame f;
    f.xmin = 0;
    f.ymin = 0;
    f.h = 1;
    f.nx = width;
    f.ny = height;
    RasterGrid g(f, mode);

    // Row 0 of the file is the top of the image; grid row ny-1 is the top.
    if (magic == "P2") {
        for (int row = 0; row < height; ++row)
            for (int col = 0; col < width; ++col) {
                int v = 0;
                if (!(in >> v)) throw InputError("pgm: truncated pixel data");
                g.set(col, height - 1 - row, v != 0);
            }
    } else {
        in.get(); // single whitespace after maxval
        std::vector<char> buf(size_t(width) * height);
        in.read(buf.data(), std::streamsize(buf.size()));
        if (in.gcount() != std::streamsize(buf.size()))
            throw InputError("pgm: truncated pixel data");
        for (int row = 0; row < height; ++row)
            for (int col = 0; col < width; ++col)
                g.set(col, height - 1 - row,
                      static_cast<unsigned char>(buf[size_t(row) * width + col]) != 0);
    }

    for (int ix = 0; ix < width; ++ix) {
        g.set(ix, 0, false);
        g.set(ix, height - 1, false);
    }
    for (int iy = 0; iy < height; ++iy) {
        g.set(0, iy, false);
        g.set(width - 1, iy, false);
    }
    return g;
}

} // namespace ptopo
