#include "corepeel/io.hpp"

#include <zlib.h>

#include <fstream>
#include <sstream>

namespace corepeel {

namespace {

std::string read_gz(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error(path + ": cannot open");
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(f, buf, sizeof(buf))) > 0) out.append(buf, static_cast<std::size_t>(n));
    bool ok = n == 0;
    gzclose(f);
    if (!ok) throw std::runtime_error(path + ": gzip read error");
    return out;
}

}  // namespace

Graph load_edge_list_file(const std::string& path) {
    if (path.size() > 3 && path.ends_with(".gz")) {
        std::istringstream in(read_gz(path));
        return parse_edge_list(in);
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    return parse_edge_list(in);
}

}  // namespace corepeel
