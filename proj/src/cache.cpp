#include "cyclosrg/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cyclosrg {

namespace {

u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string key_material(u64 p, unsigned f, const std::vector<std::uint32_t>& modulus,
                         const std::vector<std::uint32_t>& gamma, u64 N) {
    std::ostringstream os;
    os << p << "|" << f << "|";
    for (auto c : modulus) os << c << ",";
    os << "|";
    for (auto c : gamma) os << c << ",";
    os << "|" << N;
    return os.str();
}

std::string path_for(const std::string& dir, u64 p, unsigned f,
                     const std::vector<std::uint32_t>& modulus,
                     const std::vector<std::uint32_t>& gamma, u64 N) {
    std::ostringstream os;
    os << dir << "/hist-" << p << "-" << f << "-" << N << "-"
       << std::hex << fnv1a(key_material(p, f, modulus, gamma, N)) << ".json";
    return os.str();
}

} // namespace

std::string cache_path(const std::string& dir, const FieldSpec& spec, u64 N) {
    return path_for(dir, spec.p(), spec.f(), spec.modulus(), spec.gamma().c, N);
}

std::optional<TraceHistogram> cache_load(const std::string& dir, const FieldSpec& spec, u64 N) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(cache_path(dir, spec, N));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    TraceHistogram h;
    try {
        h = TraceHistogram::from_json(buf.str());
    } catch (...) {
        return std::nullopt;
    }
    if (h.p != spec.p() || h.f != spec.f() || h.modulus != spec.modulus() ||
        h.gamma != spec.gamma().c || h.N != N)
        return std::nullopt;
    return h;
}

void cache_store(const std::string& dir, const TraceHistogram& hist) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream out(path_for(dir, hist.p, hist.f, hist.modulus, hist.gamma, hist.N));
    out << hist.to_json();
}

TraceHistogram histogram_cached(const FieldSpec& spec, u64 N, const Budgets& budgets) {
    if (auto h = cache_load(budgets.cache_dir, spec, N)) return *h;
    TraceHistogram h = trace_histogram(spec, N, budgets.workers);
    cache_store(budgets.cache_dir, h);
    return h;
}

} // namespace cyclosrg
