#![no_main]

use libfuzzer_sys::fuzz_target;
use stratzero_cli::{parse_game_file, render_game_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(game) = parse_game_file(text) {
        assert_eq!(parse_game_file(&render_game_file(&game)).unwrap(), game);
        // classification must not panic on any parsed game of modest size
        if game.m() * game.n() <= 64 {
            let _ = stratzero::ser0::classify(&game);
        }
    }
});
