#include "lanecraft/replay.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lanecraft {

std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x00000100000001b3ull;
    }
    return hash;
}

std::string event_to_json_line(const Event& e) {
    char buf[256];
    int n;
    if (e.has_pos) {
        n = std::snprintf(buf, sizeof(buf),
                          "{\"tick\":%lld,\"time\":%.6f,\"kind\":\"%s\",\"actor\":%u,"
                          "\"target\":%u,\"value\":%.6g,\"x\":%.3f,\"y\":%.3f}\n",
                          static_cast<long long>(e.tick), e.time, event_kind_name(e.kind),
                          e.actor, e.target, e.value, e.x, e.y);
    } else {
        n = std::snprintf(buf, sizeof(buf),
                          "{\"tick\":%lld,\"time\":%.6f,\"kind\":\"%s\",\"actor\":%u,"
                          "\"target\":%u,\"value\":%.6g}\n",
                          static_cast<long long>(e.tick), e.time, event_kind_name(e.kind),
                          e.actor, e.target, e.value);
    }
    return std::string(buf, static_cast<std::size_t>(n));
}

void ReplayWriter::add(const Event& event) {
    text_ += event_to_json_line(event);
    count_ += 1;
}

void ReplayWriter::add_all(const std::vector<Event>& events) {
    for (const Event& e : events) add(e);
}

std::uint64_t ReplayWriter::hash() const { return fnv1a64(text_.data(), text_.size()); }

void ReplayWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open replay file for writing: " + path);
    out.write(text_.data(), static_cast<std::streamsize>(text_.size()));
}

}  // namespace lanecraft
