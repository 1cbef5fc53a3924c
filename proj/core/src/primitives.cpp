// Copyright 2026 The qrypt0 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrypt0/primitives.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>

#include <limits>
#include <memory>

#include "qrypt0/error.hpp"

namespace qrypt0::primitives {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const noexcept { EVP_CIPHER_CTX_free(ctx); }
};

int checked_int(std::size_t n) {
  if (n > static_cast<std::size_t>(std::numeric_limits<int>::max()))
    fail(Errc::InvalidArgument, "buffer too large for crypto backend");
  return static_cast<int>(n);
}

}  // namespace

std::vector<std::uint8_t> pbkdf2_hmac_sha256(std::string_view passphrase,
                                             std::span<const std::uint8_t> salt,
                                             unsigned iterations, std::size_t out_len) {
  std::vector<std::uint8_t> out(out_len);
  if (PKCS5_PBKDF2_HMAC(passphrase.data(), checked_int(passphrase.size()), salt.data(),
                        checked_int(salt.size()), checked_int(iterations), EVP_sha256(),
                        checked_int(out_len), out.data()) != 1)
    fail(Errc::InvalidArgument, "PBKDF2 failed");
  return out;
}

Sha256Digest hmac_sha256(std::span<const std::uint8_t> key,
                         std::span<const std::uint8_t> message) {
  Sha256Digest tag{};
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), checked_int(key.size()), message.data(),
           message.size(), tag.data(), &len) == nullptr ||
      len != tag.size())
    fail(Errc::InvalidArgument, "HMAC-SHA-256 failed");
  return tag;
}

std::vector<std::uint8_t> aes256_ctr(std::span<const std::uint8_t, 32> key,
                                     std::span<const std::uint8_t, 16> counter_block,
                                     std::span<const std::uint8_t> input) {
  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  if (!ctx) fail(Errc::InvalidArgument, "cannot allocate cipher context");

  // OpenSSL's CTR mode increments the full 16-byte block big-endian.
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_ctr(), nullptr, key.data(),
                         counter_block.data()) != 1)
    fail(Errc::InvalidArgument, "AES-256-CTR init failed");

  std::vector<std::uint8_t> out(input.size());
  int written = 0;
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &written, input.data(),
                        checked_int(input.size())) != 1)
    fail(Errc::InvalidArgument, "AES-256-CTR update failed");
  int tail = 0;
  if (EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &tail) != 1 ||
      static_cast<std::size_t>(written + tail) != input.size())
    fail(Errc::InvalidArgument, "AES-256-CTR final failed");
  return out;
}

void fill_random(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), checked_int(out.size())) != 1)
    fail(Errc::EntropyUnavailable, "system entropy source failed");
}

bool constant_time_equal(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b) noexcept {
  if (a.size() != b.size()) return false;
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void secure_zero(std::span<std::uint8_t> buf) noexcept {
  OPENSSL_cleanse(buf.data(), buf.size());
}

}  // namespace qrypt0::primitives
