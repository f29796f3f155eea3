//! Named reference systems: the cyclic systems C1, C2, C3 and C5 given by
//! base blocks, every compact listing of the STS(21) study, and a few small
//! classical systems.

use crate::codec::decode_compact;
use crate::generate::{self, CyclicSpec};
use crate::system::TripleSystem;

#[derive(Clone, Copy, Debug)]
pub enum Source {
    Compact(&'static str),
    Cyclic(usize, &'static [[usize; 3]]),
    Builtin(fn() -> TripleSystem),
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    pub source: Source,
}

impl Fixture {
    pub fn system(&self) -> TripleSystem {
        match self.source {
            Source::Compact(code) => decode_compact(code, 21).expect("fixture listings decode"),
            Source::Cyclic(v, bases) => CyclicSpec::new(v, bases).generate().expect("fixture base blocks develop"),
            Source::Builtin(f) => f(),
        }
    }

    pub fn order(&self) -> usize {
        match self.source {
            Source::Compact(_) => 21,
            Source::Cyclic(v, _) => v,
            Source::Builtin(f) => f().order(),
        }
    }

    /// The compact listing, for fixtures defined by one.
    pub fn code(&self) -> Option<&'static str> {
        match self.source {
            Source::Compact(code) => Some(code),
            _ => None,
        }
    }

    /// A line in one of the text formats that reproduces this fixture.
    pub fn to_line(&self) -> String {
        match self.source {
            Source::Compact(code) => code.to_string(),
            Source::Cyclic(v, bases) => CyclicSpec::new(v, bases).to_string(),
            Source::Builtin(_) => crate::encode_compact(&self.system()).to_string(),
        }
    }
}

const fn compact(id: &'static str, description: &'static str, code: &'static str) -> Fixture {
    Fixture {
        id,
        description,
        source: Source::Compact(code),
    }
}

const fn cyclic(id: &'static str, description: &'static str, bases: &'static [[usize; 3]]) -> Fixture {
    Fixture {
        id,
        description,
        source: Source::Cyclic(21, bases),
    }
}

const fn builtin(id: &'static str, description: &'static str, f: fn() -> TripleSystem) -> Fixture {
    Fixture {
        id,
        description,
        source: Source::Builtin(f),
    }
}

pub const C1: [[usize; 3]; 4] = [[0, 1, 3], [0, 4, 12], [0, 5, 11], [0, 7, 14]];
pub const C2: [[usize; 3]; 4] = [[0, 1, 3], [0, 4, 12], [0, 5, 15], [0, 7, 14]];
pub const C3: [[usize; 3]; 4] = [[0, 1, 5], [0, 2, 10], [0, 3, 9], [0, 7, 14]];
pub const C5: [[usize; 3]; 4] = [[0, 1, 5], [0, 2, 13], [0, 3, 9], [0, 7, 14]];

pub static FIXTURES: &[Fixture] = &[
    cyclic("C1", "cyclic, 798 grids, group order 504", &C1),
    cyclic("C2", "the cyclic anti-Pasch system, group order 21", &C2),
    cyclic("C3", "cyclic, direct product STS(7) x STS(3), group order 1008", &C3),
    cyclic("C5", "cyclic, 441 hexagons, no mitres, crowns or prisms, group order 882", &C5),
    compact("F72", "294 parallel classes, not resolvable, group order 72", "2468bcfgjk578cbgfkj867degfik7ihdekj8gfjkihaihkjghiedjkjkceihfgkjhikjhi"),
    compact("FNOPC1", "no parallel class; automorphism with seven 3-cycles", "fh6idgkacjge7jihdbkkc8fjbei5acfgjidbhgkj9efhikkjcehicdhedgikjkkjfhjgki"),
    compact("FNOPC2", "no parallel class; automorphism with seven 3-cycles", "kj69cfedgiid7acghejbe8hdcfk5ekicgjicjdkhdjekhibagfk9hgkfhjkjfighkjiijk"),
    compact("FNOPC3", "no parallel class; automorphism with seven 3-cycles", "269cikhdjgd7aijefkhbe8kjgciha9chkjibfdikjegjkia9jhgbkfhifgfhdjgekekjki"),
    compact("FNOPC4", "no parallel class; automorphism with seven 3-cycles", "kj697acfhii87abdfgjb689ehgkgfehkjihcfikjdjgkiikcjfhjdkghiehggfkhijejkk"),
    compact("FNOPC5", "no parallel class; automorphism with seven 3-cycles", "kj6f7dachii87gedbfjh68cbegkji9gdkfkaehgibfchjdcjhikekfjigijkhkfjgkjikh"),
    compact("FNOPC6", "no parallel class; automorphism with seven 3-cycles", "26fdejcigke7gkchdjihc8dikfejbajgidk9hkjeiifkejcejgfdgkhfhiedcjhkhkjgik"),
    compact("FNOPC7", "no parallel class; automorphism with seven 3-cycles", "kj69dcbegiie7a9dcjhbc8eadhkgf9ikjhhjaikfbkjgi8dfikegijchkjfhgkghjfkikj"),
    compact("FNOPC8", "no parallel class; automorphism with seven 3-cycles", "kj6f7acdgii87gbedhjh689cefkjigfbkekhbgeifahdj8hkgjifijhkjgikfgkhjfkikj"),
    compact("FNOPC9", "no parallel class; automorphism with seven 3-cycles", "kj6b7cafhii879dbfgja68ebhgkcehfgjkdfhgkjgfhikikjhcfjdkfggeihkijikjejik"),
    compact("FNOPC10", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abdecjkiijk9abfghgfbaekjhb9dika9jeikjifhigjhhkghgfjkfkgjhik"),
    compact("FNOPC11", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abfghijkdecjkighfcebjgkidk9hjiaifkjdcighehjffkgbkjkijiehhgk"),
    compact("FNOPC12", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abcdejkicdefghijkhgafjikfgbkij9hikj8kdijeijkjckibfhghhggfhk"),
    compact("FNOPC13", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abfghijk786kijhfgjibgekhk9hdigafjehedbgjkcbhkjafikgjikhjfik"),
    compact("FNOPC14", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abdecjkiijkab9hfgcejgfhkdhkfgiifhgjgfeckhdckedjkjiijkikgjhh"),
    compact("FNOPC15", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abdecjkiijk9abfgh5cajhgkbdkhfie9igfjhgfkjfgikhjkgfjihjkikeh"),
    compact("FNOPC16", "no parallel class; automorphism with three fixed points and six 3-cycles", "2678cdeijk9abdecjki867ijkhfgjidhgekkehfdicgfejjibkhgkaifhjbghkfgijhkjk"),
    compact("FBAL1", "3-balanced", "2468bcfgjk56jkcbgfi65ihacegkdahjgik9eifkhjgbekijhcfjdhkifekgdjkijhikhj"),
    compact("FBAL2", "3-balanced", "2678cdeijk9abfghjkiijkecdfghkjdchgfidehfgcegfh8ikjhkjihjikgedcekijikjk"),
    compact("FBAL3", "3-balanced", "2468bcfgjk578dehijk867jkchig7ihfgkj8kjihgfcbihkjadeihkgfjkeiedgfkjhikj"),
    compact("FBAL4", "3-balanced", "2468bcfgjk56jkcbgfi65ihacegkdahkgij9eifjhkgbekijhcfjdhkifekgdjkijhijhk"),
    compact("FBAL5", "3-balanced", "2468bcfgjk578achijk867cbjkhi7ihdekj8fgkjihhijkgfjkhiegedgfikgfedkjkjih"),
    compact("FHEXFREE", "the hexagon-free system", "2468bcfgjkde78afgik78hijkcegjahegki9kidjfhgbdikfcehjgjdhkkfiejihhikjkj"),
    compact("F108", "group order 108, most Pasch configurations, 4-chromatic", "2468bcfgjk578achijk867cbjkhi7ihfgkj8dekjihhijkgfjkhiegedgfkjgfedikkjih"),
    compact("FCROWNMAX", "396 crowns, group order 18", "2468bcfgjkbcdejkagi9afghicekh7fjigk8igkhjfaekgj9dfjkcdikbehjijhhikjikh"),
    compact("F294", "prism-free, crown-free, group order 294", "2468acegik56ijbghfk659fkdjihcehdgkjkhfcijggajkehidbeifjkbhjcikkijhfjgk"),
    compact("F54", "1773 prisms, group order 54", "2468acegik857kfehij678gjidhk7bcfgjk8idkfjhdejkhichgkfjhifgjkebjgikjkhi"),
    compact("FTWIN1A", "twin 1A", "kj69cfegihid7acgjhfbe8hdfkggfaihjkhjbfik9kgjiedbikcbjiajkkeieijdjkhghk"),
    compact("FTWIN1B", "twin 1B", "269cfegihkd7acgjhfkbe8hdfkgjgfaihjkhjbfik9kgjiedbikcbjiajkkeieijdjkhgh"),
    compact("FTWIN2A", "twin 2A", "kj69cfbdhiid7a9gefjbe8hacgka9ikjfhbijgkhkjhigbaefj9dgkheihgikjfijkkjik"),
    compact("FTWIN2B", "twin 2B", "269cfbdhikd7a9gefjkbe8hacgkja9ikjfhbijgkhkjhigbaefj9dgkheihgikjfijkkji"),
    compact("FTWIN3A", "twin 3A", "ed69chbjikcd7a9fkjibe8gaijkji8cfkhk8dgih7hejgejfhkkcgfjdighkgfjhkiejki"),
    compact("FTWIN3B", "twin 3B", "269chbjeikd7a9fkejibe8gaidjkji8cfkhk8dgih7hejgejfhkkcgfjdighkgfjhkijki"),
    compact("FTWIN4A", "twin 4A", "26bcgfakjid79ghbkijae8fhbjik87gehik6chfjkdfgkjkjiehdifjcedgkekjikjighh"),
    compact("FTWIN4B", "twin 4B", "a96bcgfkjibd79ghkijae8fhjik87gehik6chfjkdfgkjkjiehdifjcedgkebkjikjighh"),
    compact("FTWIN5A", "twin 5A", "26bcgfakjid79ghbkijae8fhbjik87gcfjk6dhgkjefhikikjchejfkdeegidikjikjhgh"),
    compact("FTWIN5B", "twin 5B", "a96bcgfkjibd79ghkijae8fhjik87gcfjk6dhgkjefhikikjchejfkdeegidbikjikjhgh"),
    compact("FTWIN6A", "twin 6A", "26h7jacfik87fkdbjgig68ibehkjikafdejjbegdk9cheidcjihgejkfhikghgkhifjkjk"),
    compact("FTWIN6B", "twin 6B", "a96h7jcfikb87fkdjgig68iehkjikafdejjbegdk9cheidcjihgejkfhikghbgkhifjkjk"),
    compact("FMITRE1", "exactly one mitre", "2678cdeijk9abfghijkdeckijghfjibakfhkb9giha9hjg8jhgikjfhifkgbekiejidkjk"),
    compact("F2P1", "two Pasch configurations exchanged by an automorphism", "2468acegik69beghjikcfa8jdehkdgkfbhjjaheigkicgkhcbgijkkdfijhfejkfijkhij"),
    compact("F2P2", "two Pasch configurations exchanged by an automorphism", "2468acegik69ejcfhgkgjh8kicdfchkeifj7bidgkh9jgkiadjikhgiefbhgjkfjhkjikj"),
    compact("F2P3", "two Pasch configurations exchanged by an automorphism", "2468acegikh8adjcfgk9igkcdfejd7egkijkbdhjgff9ijhijefheigkcjhkdkihkhkijj"),
    compact("F2P4", "two Pasch configurations exchanged by an automorphism", "2468acegikajhdf9gekgekihbcjfeb9hjki8gcdfikafdijjfkcheikdkgjhjikihjghjk"),
    compact("F2PNONISO", "two Pasch configurations whose switches are non-isomorphic", "2468acegikgkfbh9jdich8djegfkajkhdifcfeaigjbgijkighkecfgdjkikjeihjhkkhj"),
    builtin("STS7", "the Fano plane", generate::fano),
    builtin("STS9", "the affine plane AG(2,3)", generate::affine_plane),
    builtin("STS13", "the cyclic STS(13)", generate::cyclic13),
    builtin("STS15PG", "the points and lines of PG(3,2)", generate::projective_space),
];

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

pub fn get(id: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.id.eq_ignore_ascii_case(id))
}

/// Load a fixture by id, panicking on an unknown id.
pub fn system(id: &str) -> TripleSystem {
    get(id).unwrap_or_else(|| panic!("unknown fixture {id}")).system()
}

/// Fixtures whose id starts with `prefix`, in corpus order.
pub fn with_prefix(prefix: &'static str) -> impl Iterator<Item = &'static Fixture> {
    FIXTURES.iter().filter(move |f| f.id.starts_with(prefix))
}

/// The compact listings, in the order they appear in the study.
pub fn listings() -> impl Iterator<Item = &'static Fixture> {
    FIXTURES.iter().filter(|f| matches!(f.source, Source::Compact(_)))
}

/// Every order-21 fixture.
pub fn order21() -> impl Iterator<Item = &'static Fixture> {
    FIXTURES.iter().filter(|f| !matches!(f.source, Source::Builtin(_)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = FIXTURES.iter().map(|f| f.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), FIXTURES.len());
    }

    #[test]
    fn every_fixture_is_valid() {
        for f in FIXTURES {
            let s = f.system();
            assert_eq!(s.order(), f.order(), "{}", f.id);
        }
        assert_eq!(listings().count(), 45);
        assert_eq!(with_prefix("FNOPC").count(), 16);
        assert_eq!(with_prefix("FTWIN").count(), 12);
        assert_eq!(order21().count(), 49);
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(get("c3").unwrap().id, "C3");
        assert!(get("C4").is_none());
    }
}
