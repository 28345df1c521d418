//! Tile-signature parsing and rendering over the alphabet
//! `{L, d, A, B, D, H, I, V}`, symbol counts, and seeded random signatures.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::Catalog;
use crate::rng::SplitMix64;

/// Frame of a tile: plain `L` or `dL` (the frame carrying a doubled edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Frame {
    L,
    DL,
}

impl Frame {
    pub fn as_str(&self) -> &'static str {
        match self {
            Frame::L => "L",
            Frame::DL => "dL",
        }
    }
}

/// One tile of a signature: picture token as written (orientation included)
/// plus the frame.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TileSig {
    pub picture: String,
    pub frame: Frame,
}

impl TileSig {
    pub fn new(picture: &str, frame: Frame) -> Self {
        TileSig {
            picture: String::from(picture),
            frame,
        }
    }
}

/// Parsed sequence of tile signatures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    tiles: Vec<TileSig>,
}

/// Occurrence counts of each alphabet symbol in a rendered signature, plus
/// picture-level counts of the `AIV` and `VIA` tokens.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SymbolCounts {
    pub a: u32,
    pub b: u32,
    pub d_upper: u32,
    pub h: u32,
    pub i: u32,
    pub v: u32,
    pub l: u32,
    pub d_lower: u32,
    pub n_aiv: u32,
    pub n_via: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    UnknownPicture { token: String, offset: usize },
    DanglingD { offset: usize },
    MissingFrame { offset: usize },
    BadTileCount { count: usize },
    BadChar { ch: char, offset: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty signature"),
            ParseError::UnknownPicture { token, offset } => {
                write!(f, "unknown picture token '{token}' at offset {offset}")
            }
            ParseError::DanglingD { offset } => {
                write!(f, "'d' not followed by 'L' at offset {offset}")
            }
            ParseError::MissingFrame { offset } => {
                write!(f, "picture token not terminated by a frame at offset {offset}")
            }
            ParseError::BadTileCount { count } => {
                write!(f, "tile count {count} is not an odd number >= 3")
            }
            ParseError::BadChar { ch, offset } => {
                write!(f, "unexpected character '{ch}' at offset {offset}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

impl Signature {
    pub fn from_tiles(tiles: Vec<TileSig>) -> Result<Self, ParseError> {
        if tiles.len() < 3 || tiles.len() % 2 == 0 {
            return Err(ParseError::BadTileCount { count: tiles.len() });
        }
        Ok(Signature { tiles })
    }

    pub fn tiles(&self) -> &[TileSig] {
        &self.tiles
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    /// Greedy left-to-right tokenization. Uppercase letters other than `L`
    /// accumulate a picture token; `L` or `dL` terminates a tile; `d` must be
    /// followed immediately by `L`. Whitespace anywhere is ignored.
    pub fn parse(text: &str, catalog: &Catalog) -> Result<Self, ParseError> {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if chars.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut tiles = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let token_start = chars[i].0;
            let mut token = String::new();
            while i < chars.len() {
                let (offset, ch) = chars[i];
                match ch {
                    'L' | 'd' => break,
                    c if c.is_ascii_uppercase() => {
                        token.push(c);
                        i += 1;
                    }
                    c => return Err(ParseError::BadChar { ch: c, offset }),
                }
            }
            if i >= chars.len() {
                return Err(ParseError::MissingFrame { offset: text.len() });
            }
            let (offset, ch) = chars[i];
            let frame = if ch == 'L' {
                i += 1;
                Frame::L
            } else {
                // ch == 'd'
                if token.is_empty() {
                    return Err(ParseError::DanglingD { offset });
                }
                i += 1;
                if i < chars.len() && chars[i].1 == 'L' {
                    i += 1;
                    Frame::DL
                } else {
                    return Err(ParseError::DanglingD { offset });
                }
            };
            if !catalog.is_picture_token(&token) {
                return Err(ParseError::UnknownPicture {
                    token,
                    offset: token_start,
                });
            }
            tiles.push(TileSig {
                picture: token,
                frame,
            });
        }
        Signature::from_tiles(tiles)
    }

    /// Canonical text: concatenated tile signatures, no separators.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.tiles {
            out.push_str(&t.picture);
            out.push_str(t.frame.as_str());
        }
        out
    }

    /// Per-symbol occurrence counts plus AIV/VIA picture counts.
    pub fn counts(&self) -> SymbolCounts {
        let mut c = SymbolCounts::default();
        for t in &self.tiles {
            for ch in t.picture.chars() {
                match ch {
                    'A' => c.a += 1,
                    'B' => c.b += 1,
                    'D' => c.d_upper += 1,
                    'H' => c.h += 1,
                    'I' => c.i += 1,
                    'V' => c.v += 1,
                    _ => {}
                }
            }
            c.l += 1;
            if t.frame == Frame::DL {
                c.d_lower += 1;
            }
            if t.picture == "AIV" {
                c.n_aiv += 1;
            }
            if t.picture == "VIA" {
                c.n_via += 1;
            }
        }
        c
    }

    /// Uniformly random signature with `num_tiles` tiles drawn from
    /// `allowed` (picture token, frame) pairs; deterministic for fixed seed.
    pub fn random(
        num_tiles: usize,
        allowed: &[TileSig],
        seed: u64,
    ) -> Result<Self, ParseError> {
        if num_tiles < 3 || num_tiles % 2 == 0 {
            return Err(ParseError::BadTileCount { count: num_tiles });
        }
        assert!(!allowed.is_empty(), "empty tile filter");
        let mut rng = SplitMix64::new(seed);
        let tiles = (0..num_tiles)
            .map(|_| allowed[rng.below(allowed.len() as u64) as usize].clone())
            .collect();
        Signature::from_tiles(tiles)
    }
}
