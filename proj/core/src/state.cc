// Copyright 2026 The Procarcade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "procarcade/state.h"

#include <bit>
#include <span>

#include "procarcade/hash.h"

namespace procarcade {
namespace {

void AddFixed(Hasher& h, Fixed v) { h.AddSigned(v.raw()); }

}  // namespace

uint64_t StateHash(const GameState& s) {
  Hasher h;
  h.Add(s.params ? s.params->digest() : 0);
  h.Add(static_cast<uint64_t>(s.game))
      .Add(static_cast<uint64_t>(s.difficulty))
      .Add(s.memory_mode)
      .Add(s.level_seed)
      .Add(s.generation_attempt);
  h.Add(static_cast<uint64_t>(s.terrain.width())).Add(s.terrain.height());
  h.AddBytes(std::span(reinterpret_cast<const uint8_t*>(s.terrain.cells().data()),
                       s.terrain.size()));
  h.AddBytes(std::span(reinterpret_cast<const uint8_t*>(s.items.cells().data()),
                       s.items.size()));
  h.AddBytes(std::span(s.flags.cells().data(), s.flags.size()));
  h.Add(s.entities.size());
  for (const Entity& e : s.entities) {
    h.Add(static_cast<uint64_t>(e.kind));
    AddFixed(h, e.pos.x);
    AddFixed(h, e.pos.y);
    AddFixed(h, e.vel.x);
    AddFixed(h, e.vel.y);
    AddFixed(h, e.w);
    AddFixed(h, e.h);
    h.AddSigned(e.timer).AddSigned(e.a).AddSigned(e.b).AddSigned(e.dir).Add(e.alive);
  }
  const PlayerState& p = s.player;
  AddFixed(h, p.pos.x);
  AddFixed(h, p.pos.y);
  AddFixed(h, p.vel.x);
  AddFixed(h, p.vel.y);
  AddFixed(h, p.w);
  AddFixed(h, p.h);
  h.AddSigned(p.vy).AddSigned(p.charge).AddSigned(p.facing).Add(p.heading)
      .Add(p.keys).AddSigned(p.cooldown).Add(p.alive);
  h.Add(s.atlas.palette_id).Add(static_cast<uint64_t>(s.atlas.pattern));
  h.Add(s.tick_rng.key()).Add(s.tick_rng.counter());
  h.AddSigned(s.step_count).AddSigned(s.level_step).AddSigned(s.levels_completed);
  h.Add(std::bit_cast<uint64_t>(s.episode_return));
  h.AddSigned(s.goal_total).AddSigned(s.goal_remaining).AddSigned(s.global_timer);
  h.Add(std::bit_cast<uint64_t>(s.unit_reward));
  return h.digest();
}

}  // namespace procarcade
