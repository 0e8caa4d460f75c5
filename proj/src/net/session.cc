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
#include "pheml/net/session.h"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "pheml/common/error.h"

namespace pheml::net {

std::vector<Envelope> Transcript::Envelopes() const {
  std::vector<Envelope> out;
  out.reserve(lines.size());
  for (const std::string& line : lines) out.push_back(Envelope::Decode(line));
  return out;
}

void Transcript::ExportJsonl(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  for (const std::string& line : lines) out << line << '\n';
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Session::Session(int n_owners, int latency_ms, std::uint64_t seed)
    : n_owners_(n_owners), latency_ms_(latency_ms) {
  if (n_owners < 1) {
    throw Error(ErrorCode::kInvalidArgument, "a session needs an owner");
  }
  if (latency_ms < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative latency");
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "s-%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64("session:" + std::to_string(seed))));
  id_ = buf;
}

std::vector<PartyId> Session::Owners() const {
  std::vector<PartyId> out;
  for (int i = 1; i <= n_owners_; ++i) out.push_back(PartyId::Owner(i));
  return out;
}

void Session::RegisterHandler(const PartyId& party, Handler handler) {
  handlers_[party] = std::move(handler);
}

void Session::RegisterKey(const std::string& key_id, const PartyId& owner) {
  transcript_.key_owner[key_id] = owner;
}

std::optional<PartyId> Session::KeyOwner(const std::string& key_id) const {
  auto it = transcript_.key_owner.find(key_id);
  if (it == transcript_.key_owner.end()) return std::nullopt;
  return it->second;
}

void Session::CheckOpen() const {
  if (state_ == State::kAborted) {
    throw Error(ErrorCode::kProtocolAbort,
                "session aborted: " + abort_reason_);
  }
  if (state_ == State::kClosed) {
    throw Error(ErrorCode::kSessionClosed, "session is closed");
  }
}

std::string Session::NewRoundTrip() {
  return "rt-" + std::to_string(next_rt_++);
}

std::string Session::NewNonceId() {
  return "nonce-" + std::to_string(next_nonce_++);
}

Envelope Session::Deliver(const PartyId& from, const PartyId& to,
                          const std::string& rt, Message msg) {
  Envelope e;
  e.session = id_;
  e.seq = seq_[{from, to}]++;
  e.from = from;
  e.to = to;
  e.rt = rt;
  e.msg = std::move(msg);
  std::string wire = e.Encode();
  bytes_ += wire.size();
  transcript_.lines.push_back(wire);
  return Envelope::Decode(transcript_.lines.back());
}

Message Session::Dispatch(const Envelope& request) {
  auto it = handlers_.find(request.to);
  if (it == handlers_.end()) {
    Abort(request.to.ToString() + " is offline");
    CheckOpen();
  }
  const auto start = std::chrono::steady_clock::now();
  Message reply;
  try {
    reply = it->second(request);
  } catch (const Error& err) {
    Abort(request.to.ToString() + " failed: " + err.what());
    throw;
  }
  const auto stop = std::chrono::steady_clock::now();
  if (request.to.is_owner()) {
    owner_wall_ms_ +=
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  return reply;
}

Message Session::Call(const PartyId& from, const PartyId& to,
                      Message request) {
  CheckOpen();
  const std::string rt = NewRoundTrip();
  Envelope req = Deliver(from, to, rt, std::move(request));
  Message reply = Dispatch(req);
  Envelope rep = Deliver(to, from, rt, std::move(reply));
  ++interactions_;
  return rep.msg;
}

std::vector<Message> Session::CallAll(const PartyId& from,
                                      const std::vector<PartyId>& to,
                                      std::vector<Message> requests) {
  CheckOpen();
  if (to.size() != requests.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one request per recipient");
  }
  const std::string rt = NewRoundTrip();
  std::vector<Envelope> delivered;
  for (std::size_t i = 0; i < to.size(); ++i) {
    delivered.push_back(Deliver(from, to[i], rt, std::move(requests[i])));
  }
  std::vector<Message> replies;
  for (const Envelope& req : delivered) {
    Message reply = Dispatch(req);
    replies.push_back(Deliver(req.to, from, rt, std::move(reply)).msg);
  }
  ++interactions_;
  return replies;
}

Message Session::Push(const PartyId& from, const PartyId& to, Message msg) {
  CheckOpen();
  return Deliver(from, to, NewRoundTrip(), std::move(msg)).msg;
}

void Session::NoteReceived(const PartyId& party, const BigInt& plaintext) {
  transcript_.received_plaintexts[party].insert(ToHex(plaintext));
}

void Session::Abort(const std::string& reason) {
  if (state_ == State::kOpen) {
    state_ = State::kAborted;
    abort_reason_ = reason;
  }
}

void Session::Close() {
  if (state_ == State::kOpen) state_ = State::kClosed;
}

}  // namespace pheml::net
