/* Copyright 2026 The audiotext Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "audiotext/synthdata/words.h"

#include <array>

namespace audiotext::synth {
namespace {

constexpr std::array<std::string_view, 1000> kWords = {
    "about", "above", "across", "act", "active", "actor", "add", "address",
    "admit", "adult", "advice", "affect", "afraid", "after", "again", "against",
    "age", "agency", "agent", "ago", "agree", "ahead", "air", "all", "allow",
    "almost", "alone", "along", "already", "also", "always", "among", "amount",
    "and", "animal", "annual", "another", "answer", "any", "anyone", "anything",
    "appear", "apple", "apply", "area", "argue", "arm", "army", "around", "arrive",
    "art", "article", "artist", "ask", "assume", "attack", "attempt", "attend",
    "author", "avoid", "away", "baby", "back", "bad", "bag", "ball", "bank", "bar",
    "base", "basic", "basket", "battle", "beach", "bear", "beat", "beauty",
    "because", "become", "bed", "before", "begin", "behind", "believe", "benefit",
    "best", "better", "between", "beyond", "big", "bill", "bird", "birth", "bit",
    "black", "blood", "blue", "board", "boat", "body", "book", "born", "both",
    "box", "boy", "brain", "branch", "bread", "break", "bridge", "brief", "bring",
    "broad", "brother", "brown", "budget", "build", "burn", "bus", "business",
    "busy", "but", "buy", "cake", "call", "calm", "camera", "camp", "can",
    "cancer", "candle", "capital", "car", "card", "care", "career", "carry",
    "case", "cash", "cat", "catch", "cause", "cell", "center", "central",
    "century", "certain", "chair", "chance", "change", "charge", "cheap", "check",
    "chest", "chief", "child", "choice", "choose", "church", "circle", "citizen",
    "city", "civil", "claim", "class", "clean", "clear", "climb", "clock", "close",
    "cloth", "cloud", "coach", "coast", "coat", "coffee", "cold", "collect",
    "college", "color", "come", "comedy", "common", "company", "compare",
    "concern", "contain", "control", "cook", "cool", "copy", "corner", "cost",
    "cotton", "couch", "count", "country", "county", "couple", "course", "court",
    "cousin", "cover", "cow", "crash", "cream", "create", "crime", "crisis",
    "crop", "cross", "crowd", "cry", "culture", "cup", "current", "custom", "cut",
    "cycle", "dad", "daily", "damage", "dance", "danger", "dark", "data", "date",
    "daughter", "day", "dead", "deal", "dear", "death", "debate", "decade",
    "decide", "deep", "defense", "degree", "delay", "deliver", "demand", "deny",
    "depend", "design", "desk", "detail", "develop", "device", "die", "diet",
    "differ", "dinner", "direct", "dirty", "discuss", "disease", "doctor", "dog",
    "dollar", "door", "double", "doubt", "down", "dozen", "draft", "drag", "drama",
    "draw", "dream", "dress", "drink", "drive", "drop", "drug", "dry", "during",
    "dust", "duty", "each", "eager", "early", "earn", "earth", "east", "easy",
    "eat", "economy", "edge", "editor", "effect", "effort", "egg", "eight",
    "either", "elect", "else", "empty", "end", "enemy", "energy", "engine",
    "enjoy", "enough", "enter", "entire", "equal", "error", "escape", "estate",
    "even", "evening", "event", "ever", "every", "exact", "exam", "example",
    "expect", "expert", "explain", "eye", "face", "fact", "factor", "fail", "fair",
    "faith", "fall", "family", "famous", "fan", "far", "farm", "fast", "father",
    "fault", "fear", "feature", "federal", "feed", "feel", "fellow", "few",
    "field", "fight", "figure", "file", "fill", "film", "final", "find", "fine",
    "finger", "finish", "fire", "firm", "first", "fish", "fit", "five", "fix",
    "flag", "flat", "flight", "floor", "flow", "flower", "fly", "focus", "follow",
    "food", "foot", "force", "foreign", "forest", "forget", "form", "former",
    "forward", "four", "frame", "free", "fresh", "friend", "front", "fruit",
    "fuel", "full", "fun", "fund", "future", "game", "garden", "gas", "gate",
    "gather", "general", "gentle", "ghost", "giant", "gift", "girl", "give",
    "glad", "glass", "goal", "god", "gold", "golf", "good", "grab", "grade",
    "grain", "grand", "grant", "grass", "great", "green", "ground", "group",
    "grow", "growth", "guard", "guess", "guest", "guide", "gun", "guy", "habit",
    "hair", "half", "hall", "hand", "handle", "hang", "happen", "happy", "hard",
    "hat", "hate", "have", "head", "health", "hear", "heart", "heat", "heavy",
    "height", "hello", "help", "her", "here", "hero", "hide", "high", "hill",
    "hire", "his", "history", "hit", "hold", "hole", "holiday", "home", "honey",
    "hope", "horse", "hospital", "host", "hot", "hotel", "hour", "house", "how",
    "huge", "human", "humor", "hunt", "hurt", "husband", "ice", "idea", "image",
    "impact", "income", "indeed", "inside", "instead", "invest", "iron", "island",
    "issue", "item", "its", "jacket", "job", "join", "joke", "judge", "juice",
    "jump", "junior", "just", "keep", "kettle", "key", "kick", "kid", "kill",
    "kind", "king", "kitchen", "knee", "knife", "know", "label", "labor", "lack",
    "lady", "lake", "land", "lane", "large", "last", "late", "laugh", "launch",
    "law", "lawyer", "layer", "lead", "leader", "leaf", "learn", "least", "leave",
    "left", "leg", "legal", "lemon", "length", "less", "lesson", "let", "letter",
    "level", "library", "life", "lift", "light", "like", "limit", "line", "link",
    "lion", "list", "listen", "little", "live", "load", "loan", "local", "lock",
    "long", "look", "lose", "loss", "lost", "lot", "loud", "love", "low", "luck",
    "lunch", "machine", "mad", "magic", "mail", "main", "major", "make", "male",
    "mall", "man", "manage", "many", "map", "market", "marry", "master", "match",
    "matter", "maybe", "mayor", "meal", "mean", "measure", "meat", "media",
    "medical", "meet", "member", "memory", "mental", "mention", "menu", "mess",
    "metal", "method", "middle", "might", "mile", "milk", "mind", "minor",
    "minute", "mirror", "miss", "mission", "mix", "model", "modern", "moment",
    "money", "monitor", "month", "mood", "moon", "moral", "more", "morning",
    "most", "mother", "motor", "mount", "mouse", "mouth", "move", "movie", "much",
    "murder", "muscle", "museum", "music", "must", "myself", "name", "narrow",
    "nation", "native", "nature", "near", "nearly", "neck", "need", "nerve",
    "never", "new", "news", "next", "nice", "night", "nine", "noble", "nobody",
    "noise", "none", "normal", "north", "nose", "note", "nothing", "notice",
    "novel", "now", "number", "nurse", "object", "obtain", "ocean", "offer",
    "office", "officer", "often", "oil", "okay", "old", "once", "one", "only",
    "onto", "open", "option", "orange", "order", "origin", "other", "outside",
    "oven", "over", "owner", "page", "pain", "paint", "pair", "palace", "panel",
    "paper", "parent", "park", "part", "party", "pass", "past", "path", "patient",
    "pattern", "pay", "peace", "pen", "people", "pepper", "per", "perfect",
    "perhaps", "period", "person", "phone", "photo", "piano", "pick", "picture",
    "piece", "pilot", "pink", "pipe", "pitch", "place", "plan", "plane", "planet",
    "plant", "plastic", "plate", "play", "player", "please", "plenty", "pocket",
    "poem", "poet", "point", "police", "policy", "poor", "popular", "porch",
    "port", "pose", "post", "pot", "potato", "pound", "power", "press", "pretty",
    "price", "pride", "priest", "prince", "print", "prison", "private", "prize",
    "problem", "process", "produce", "profit", "program", "project", "proof",
    "proper", "protect", "proud", "prove", "public", "pull", "punch", "purple",
    "push", "put", "quality", "quarter", "queen", "quick", "quiet", "quite",
    "rabbit", "race", "radio", "rail", "rain", "raise", "range", "rapid", "rate",
    "rather", "reach", "read", "ready", "real", "reason", "recall", "record",
    "red", "reduce", "reform", "region", "relate", "remain", "remove", "rent",
    "repair", "repeat", "reply", "report", "rest", "result", "return", "reveal",
    "rice", "rich", "ride", "right", "ring", "rise", "risk", "river", "road",
    "rock", "role", "roll", "roof", "room", "root", "rope", "rose", "rough",
    "round", "route", "row", "royal", "rubber", "rule", "run", "rural", "safe",
    "salad", "salt", "same", "sand", "save", "say", "scale", "scene", "school",
    "science", "score", "screen", "sea", "search", "season", "seat", "second",
    "secret", "section", "see", "seed", "seek", "seem", "sell", "send", "senior",
    "sense", "series", "serve", "set", "seven", "severe", "shade", "shadow",
    "shake", "shape", "share", "sharp", "sheep", "sheet", "shelf", "shell",
    "shift", "shine", "ship", "shirt", "shock", "shoe", "shoot", "shop", "short",
    "shot", "should", "shout", "show", "shower", "shut", "sick", "side", "sight",
    "sign", "signal", "silent", "silk", "silver", "simple", "since", "sing",
    "single", "sister", "sit", "site", "six", "size", "skill", "skin", "sky",
    "sleep", "slice", "slide", "slow", "small", "smart", "smell", "smile", "smoke",
    "snake", "snow", "soap", "soccer", "social", "sock", "soft", "soil", "soldier",
    "solid", "solve", "some", "son", "song", "soon", "sort", "sound", "soup",
    "source", "south", "space", "speak", "special", "speech", "speed", "spend",
    "spirit", "split", "sport", "spot", "spread", "spring", "square", "staff",
    "stage", "stair", "stand", "star", "start", "state", "station", "stay",
    "steady", "steal", "steel", "step", "stick", "still", "stock", "stone", "stop",
    "store", "storm", "story", "stove", "strange", "straw",
};

}  // namespace

std::span<const std::string_view> WordList() { return kWords; }

}  // namespace audiotext::synth
