// Replay log: one JSON object per event, stable field order, so identical
// matches serialize to identical bytes and hash to the same digest.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lanecraft/sim.hpp"

namespace lanecraft {

std::string event_to_json_line(const Event& event);

class ReplayWriter {
public:
    void add(const Event& event);
    void add_all(const std::vector<Event>& events);

    const std::string& text() const { return text_; }
    std::size_t event_count() const { return count_; }

    // FNV-1a 64 over the serialized stream.
    std::uint64_t hash() const;

    void write_file(const std::string& path) const;

private:
    std::string text_;
    std::size_t count_ = 0;
};

std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace lanecraft
