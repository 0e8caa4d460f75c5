/*
 * Copyright 2026 The pheml Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PHEML_NET_SESSION_H_
#define PHEML_NET_SESSION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pheml/net/envelope.h"

namespace pheml::net {

// Everything that crossed the simulated network, plus which party owns each
// key and the plaintexts each party obtained (received or decrypted).
struct Transcript {
  std::vector<std::string> lines;  // encoded envelopes, in send order
  std::map<std::string, PartyId> key_owner;
  std::map<PartyId, std::set<std::string>> received_plaintexts;  // hex

  std::vector<Envelope> Envelopes() const;
  // JSON lines, one envelope per line.
  void ExportJsonl(const std::string& path) const;
};

// Deliberate protocol faults, used to check that the audit notices them.
struct FaultFlags {
  bool skip_sign_blinding = false;
  bool reuse_nonce = false;
};

// Handles one request addressed to a party and produces the reply body.
using Handler = std::function<Message(const Envelope& request)>;

// In-process simulation of the demander/owner network. Calls are strict
// request-reply and dispatched synchronously, so a run is fully determined
// by its inputs. Every message is serialized and parsed back on delivery.
class Session {
 public:
  Session(int n_owners, int latency_ms, std::uint64_t seed);

  const std::string& id() const { return id_; }
  int n_owners() const { return n_owners_; }
  std::vector<PartyId> Owners() const;

  void RegisterHandler(const PartyId& party, Handler handler);
  void RegisterKey(const std::string& key_id, const PartyId& owner);
  std::optional<PartyId> KeyOwner(const std::string& key_id) const;

  // One request-reply round trip: one interaction.
  Message Call(const PartyId& from, const PartyId& to, Message request);
  // Same request pattern sent to several parties at once; the round counts
  // as a single interaction.
  std::vector<Message> CallAll(const PartyId& from,
                               const std::vector<PartyId>& to,
                               std::vector<Message> requests);
  // One-way delivery (setup uploads); no interaction is counted. Returns
  // the message as the recipient decodes it.
  Message Push(const PartyId& from, const PartyId& to, Message msg);

  // Records a plaintext a party obtained by decryption.
  void NoteReceived(const PartyId& party, const BigInt& plaintext);

  std::string NewNonceId();

  void Abort(const std::string& reason);
  void Close();
  bool open() const { return state_ == State::kOpen; }
  const std::string& abort_reason() const { return abort_reason_; }

  std::uint64_t interactions() const { return interactions_; }
  std::uint64_t bytes() const { return bytes_; }
  std::uint64_t sim_latency_ms() const {
    return interactions_ * static_cast<std::uint64_t>(latency_ms_);
  }
  double owner_wall_ms() const { return owner_wall_ms_; }

  FaultFlags& faults() { return faults_; }
  const FaultFlags& faults() const { return faults_; }
  const Transcript& transcript() const { return transcript_; }

 private:
  enum class State { kOpen, kClosed, kAborted };

  void CheckOpen() const;
  Envelope Deliver(const PartyId& from, const PartyId& to,
                   const std::string& rt, Message msg);
  Message Dispatch(const Envelope& request);
  std::string NewRoundTrip();

  std::string id_;
  int n_owners_;
  int latency_ms_;
  State state_ = State::kOpen;
  std::string abort_reason_;
  std::map<PartyId, Handler> handlers_;
  std::map<std::pair<PartyId, PartyId>, std::uint64_t> seq_;
  std::uint64_t next_rt_ = 0;
  std::uint64_t next_nonce_ = 0;
  std::uint64_t interactions_ = 0;
  std::uint64_t bytes_ = 0;
  double owner_wall_ms_ = 0;
  FaultFlags faults_;
  Transcript transcript_;
};

}  // namespace pheml::net

#endif  // PHEML_NET_SESSION_H_
