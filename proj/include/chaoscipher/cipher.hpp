#pragma once

#include "chaoscipher/image.hpp"
#include "chaoscipher/keys.hpp"
#include "chaoscipher/keystream.hpp"

namespace chaoscipher {

using CipherMode = MapId;

// 3D pipeline, per flat sample index t:
//   E = (((P ^ kx[t]) + ky[t]) mod 256 - kz[t]) mod 256
// Decrypt applies the exact inverse: add kz, subtract ky, XOR kx.
ImageBuffer encrypt3(const ImageBuffer& plain, const Keystream& ks);
ImageBuffer decrypt3(const ImageBuffer& cipher, const Keystream& ks);

// 2D pipeline, per flat sample index t:
//   E = ((P ^ kx[t]) + kq[t]) mod 256
ImageBuffer encrypt2(const ImageBuffer& plain, const Keystream& ks);
ImageBuffer decrypt2(const ImageBuffer& cipher, const Keystream& ks);

// Key-to-output composition: derive_config, run the orbit, extract the
// keystream, apply the pipeline for `mode`. Deterministic per (key, mode, image).
ImageBuffer encrypt_with_key(const ImageBuffer& plain, const ChaoticKey& key, CipherMode mode);
ImageBuffer decrypt_with_key(const ImageBuffer& cipher, const ChaoticKey& key, CipherMode mode);

// The same pipelines driven by an explicit config (used by the key-sensitivity
// harness to decrypt with a perturbed coefficient).
ImageBuffer encrypt_with_config(const ImageBuffer& plain, const DerivedConfig& config);
ImageBuffer decrypt_with_config(const ImageBuffer& cipher, const DerivedConfig& config);

}  // namespace chaoscipher
