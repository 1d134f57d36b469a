// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace fire {

// Self-contained SHA-256 (FIPS 180-4). The simulator keeps its own copy so the
// artifact builds without a crypto library; unit tests pin the standard test
// vectors. Streaming interface mirrors the usual Init/Write/Finalize shape.
class Sha256 {
public:
    Sha256();

    Sha256& write(const void* data, std::size_t len);
    Sha256& write(std::string_view s) { return write(s.data(), s.size()); }

    // Produces the 32-byte digest and leaves the object in a finished state;
    // reuse requires reset().
    std::array<std::uint8_t, 32> finalize();

    void reset();

private:
    void transform(const std::uint8_t* chunk);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, 64> buffer_;
    std::uint64_t total_bytes_ = 0;
    std::size_t buffered_ = 0;
};

// Lowercase hex digest of a whole message in one call.
std::string sha256_hex(std::string_view message);

std::string to_hex(const std::uint8_t* data, std::size_t len);

}  // namespace fire
