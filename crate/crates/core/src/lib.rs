pub fn placeholder() -> u32 { 42 }
