"""Fictional lexicons shared by the synthetic-report generator and the
pseudonym substituter. All values are invented; no real PII."""

from __future__ import annotations

GIVEN_NAMES: tuple[str, ...] = (
    "Alice", "Brian", "Carla", "Derek", "Elena", "Felix", "Grace", "Hector",
    "Irene", "Jonas", "Katrin", "Lionel", "Marta", "Nolan", "Opal", "Pavel",
    "Quinn", "Rosa", "Stefan", "Tessa", "Ulric", "Vera", "Wade", "Ximena",
    "Yusuf", "Zelda", "Arlen", "Bettina", "Caspar", "Dorothea", "Emmett",
    "Fiona", "Gideon", "Hattie", "Ignatius", "Jewel",
)

SURNAMES: tuple[str, ...] = (
    "Abbott", "Barlow", "Calloway", "Dempsey", "Eastman", "Fairbanks",
    "Garrity", "Hollis", "Ingram", "Jessup", "Kessler", "Lockhart",
    "Merchant", "Northrup", "Oakes", "Pennington", "Quimby", "Radcliffe",
    "Sexton", "Thatcher", "Underhill", "Vance", "Wexler", "Yardley",
    "Zimmer", "Ashford", "Brockman", "Crowley", "Donnelly", "Ellsworth",
    "Fentress", "Goddard", "Hackett", "Isley", "Jarrett", "Kimbrough",
    "Lachlan", "Mercer", "Naylor", "Osgood", "Prewitt", "Quarles",
    "Rutledge", "Sablan", "Tillman", "Upchurch", "Venner", "Whitfield",
    "Yancey", "Zabel", "Alcott", "Bramwell", "Corliss", "Draper",
    "Everhart", "Falkner", "Granger", "Hargrove", "Imler", "Joubert",
)

# "Mercer", "Granger", "Kessler", and "Whitfield" deliberately double as
# surnames so place/name mentions are not separable by word identity alone
CITIES: tuple[str, ...] = (
    "Maple Grove", "Cedar Falls", "Fox Hollow", "Alder Creek", "Birchwood",
    "Cloverdale", "Dunmore", "Eastgate", "Fern Valley", "Granite Bluff",
    "Harbor Point", "Ironwood", "Juniper Flats", "Kestrel Park",
    "Larkspur", "Mill Hollow", "North Bend", "Oak Summit", "Pine Ridge",
    "Quail Run", "Red Banks", "Silver Lake", "Timber Falls", "Union Mills",
    "Mercer", "Granger", "Kessler", "Whitfield",
)

FACILITY_PATTERNS: tuple[str, ...] = (
    "{city} Medical Center", "{city} Regional Hospital",
    "{city} Orthopedic Clinic", "{city} Community Hospital",
    "{city} Spine Institute", "{city} Physical Therapy Group",
    "{city} Surgical Associates", "{city} Rehabilitation Center",
    "{city} Imaging Center", "{city} Family Practice",
    "{surname} Orthopedic Associates", "{surname} Sports Medicine Clinic",
    "{surname} Hand Center", "{surname} Joint Institute",
    "{surname} Occupational Health", "{surname} Pain Management Group",
    "{city} Occupational Medicine", "{city} Urgent Care",
    "{city} Bone and Joint Center", "{surname} Physical Medicine",
    "{city} Wellness Clinic", "{surname} Diagnostic Imaging",
)

STREET_NAMES: tuple[str, ...] = (
    "Birchwood", "Sycamore", "Granite", "Willow", "Chestnut", "Juniper",
    "Larkspur", "Magnolia", "Pinecrest", "Sandstone", "Thornbury",
    "Veranda", "Wildflower", "Amberly", "Bristlecone", "Cobblestone",
    "Dovetail", "Elderberry", "Foxglove", "Harvest", "Ironside",
    "Kingfisher", "Meadowlark", "Nettlebrook",
)

STREET_SUFFIXES: tuple[str, ...] = ("St.", "Ave.", "Rd.", "Blvd.", "Dr.", "Ln.")

STATE_ABBREVIATIONS: tuple[str, ...] = (
    "AL", "AK", "AZ", "AR", "CA", "CO", "CT", "DE", "FL", "GA",
    "HI", "ID", "IL", "IN", "IA", "KS", "KY", "LA", "ME", "MD",
    "MA", "MI", "MN", "MS", "MO", "MT", "NE", "NV", "NH", "NJ",
    "NM", "NY", "NC", "ND", "OH", "OK", "OR", "PA", "RI", "SC",
    "SD", "TN", "TX", "UT", "VT", "VA", "WA", "WV", "WI", "WY",
)

MONTH_NAMES: tuple[str, ...] = (
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
)
