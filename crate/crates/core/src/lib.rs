pub fn ping() -> u32 { 42 }
